#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "logobf/bench/metrics.hpp"
#include "logobf/bench/normalize.hpp"
#include "logobf/bench/records.hpp"
#include "logobf/bench/scoring.hpp"
#include "logobf/common/rng.hpp"
#include "logobf/series/encoder.hpp"

namespace logobf::bench {
namespace {

using nlohmann::json;

// ---- normalize -------------------------------------------------------------

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("Sister-in-law"), "sister in law");
  EXPECT_EQ(normalize("  BROTHER. "), "brother");
  EXPECT_EQ(normalize("5.83 km away, North-East"), "5 83 km away north east");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("\t\n"), "");
}

TEST(Normalize, UnicodeFoldAndCompose) {
  // Decomposed e + combining acute composes to U+00E9 before folding.
  EXPECT_EQ(normalize("Caf\x65\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(normalize("CAF\xC3\x89"), "caf\xC3\xA9");
  EXPECT_EQ(normalize("Stra\xC3\x9F" "e"), "strasse");
  EXPECT_EQ(normalize("a\xE2\x80\x94" "b"), "a b");  // em dash is punctuation
  EXPECT_EQ(normalize("a\xC2\xA0\xC2\xA0" "b"), "a b");  // no-break spaces collapse
}

TEST(Normalize, PrintableAsciiPunctuationComplete) {
  for (int c = 0x20; c < 0x7f; ++c) {
    const std::string s(1, static_cast<char>(c));
    const std::string n = normalize("a" + s + "b");
    if (std::isalnum(c)) {
      EXPECT_EQ(n, "a" + std::string(1, static_cast<char>(std::tolower(c))) + "b");
    } else {
      EXPECT_EQ(n, "a b") << "char 0x" << std::hex << c;
    }
  }
}

TEST(Normalize, IdempotentOnRandomStrings) {
  SeededRng rng(31);
  const std::vector<std::string> extras = {"\xC3\xA9", "\xC3\x89", "\xCC\x81", "\xE2\x80\x94",
                                           "\xC3\x9F", "\xC2\xA0", "\xEF\xAC\x81"};
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    const auto n = rng.between(0, 24);
    for (std::int64_t k = 0; k < n; ++k) {
      if (rng.index(5) == 0) {
        s += extras[rng.index(extras.size())];
      } else {
        s += static_cast<char>(rng.between(0x20, 0x7e));
      }
    }
    const std::string once = normalize(s);
    EXPECT_EQ(normalize(once), once) << s;
    EXPECT_EQ(once.find("  "), std::string::npos);
    if (!once.empty()) {
      EXPECT_NE(once.front(), ' ');
      EXPECT_NE(once.back(), ' ');
    }
  }
}

// ---- metrics ---------------------------------------------------------------

TEST(ExactMatch, Examples) {
  EXPECT_DOUBLE_EQ(em_accuracy({{"Brother", "brother"}, {"sister", "brother"}}), 0.5);
  EXPECT_DOUBLE_EQ(em_accuracy({{"a", "A"}, {"b.", "B"}}), 1.0);
  EXPECT_DOUBLE_EQ(em_accuracy({{"5.83 km away, North-East", "5.83 km away, North-East"}}), 1.0);
  EXPECT_DOUBLE_EQ(em_accuracy({{"5.830 km away, North-East", "5.83 km away, North-East"}}), 0.0);
  EXPECT_THROW(em_accuracy({}), EmptyInput);
}

// Relative drop per task, BR levels averaged, unweighted mean over tasks.
double oracle_degradation(const std::vector<std::pair<double, std::vector<double>>>& cells) {
  double total = 0;
  for (const auto& [base, obf] : cells) {
    double drop = 0;
    for (double o : obf) drop += (o - base) / base;
    total += 100.0 * drop / static_cast<double>(obf.size());
  }
  return total / static_cast<double>(cells.size());
}

TEST(Degradation, ReferenceZeroShotCells) {
  const std::map<std::string, TaskAccuracy> cells = {
      {"fol", {0.98, {0.56}}},
      {"blood_relation", {0.52, {0.46, 0.45}}},
      {"number_series", {0.77, {0.60}}},
      {"direction", {0.64, {0.44}}},
  };
  const auto s = degradation(cells);
  const double oracle =
      oracle_degradation({{0.98, {0.56}}, {0.52, {0.46, 0.45}}, {0.77, {0.60}}, {0.64, {0.44}}});
  EXPECT_NEAR(s.mean, oracle, 1e-9);
  EXPECT_NEAR(s.mean, -27.2, 0.5);
  EXPECT_NEAR(s.mean, -27.00, 0.5);
  EXPECT_NEAR(s.per_task.at("fol"), -42.857142857, 1e-6);
  EXPECT_NEAR(s.per_task.at("blood_relation"), -12.5, 1e-9);
}

TEST(Degradation, EqualIsExactlyZero) {
  const auto s = degradation({{"fol", {0.7, {0.7}}}, {"blood_relation", {0.3, {0.3, 0.3}}}});
  EXPECT_EQ(s.mean, 0.0);
  for (const auto& [task, d] : s.per_task) EXPECT_EQ(d, 0.0) << task;
}

TEST(Degradation, TotalCollapse) {
  EXPECT_DOUBLE_EQ(task_degradation({1.0, {0.0}}), -100.0);
  EXPECT_THROW(task_degradation({0.0, {0.5}}), ZeroBaseAccuracy);
}

TEST(Kappa, Examples) {
  EXPECT_DOUBLE_EQ(cohen_kappa({"T", "F", "T"}, {"T", "F", "T"}), 1.0);
  EXPECT_DOUBLE_EQ(cohen_kappa({"T", "T", "F", "F"}, {"T", "F", "T", "F"}), 0.0);
  EXPECT_DOUBLE_EQ(kappa_from(0.9, 0.5), 0.8);
  EXPECT_THROW(cohen_kappa({"T"}, {"T", "F"}), LengthMismatch);
  EXPECT_DOUBLE_EQ(cohen_kappa({"T", "T"}, {"T", "T"}), 1.0);  // p_e = 1, p_o = 1
  EXPECT_THROW(kappa_from(0.5, 1.0), DegenerateMarginals);
}

TEST(Kappa, MatchesFormulaOracle) {
  SeededRng rng(8);
  const std::vector<std::string> labels = {"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> a, b;
    const auto n = rng.between(2, 30);
    for (std::int64_t k = 0; k < n; ++k) {
      a.push_back(labels[rng.index(3)]);
      b.push_back(rng.index(3) == 0 ? labels[rng.index(3)] : a.back());
    }
    double agree = 0;
    std::map<std::string, double> ca, cb;
    for (std::size_t k = 0; k < a.size(); ++k) {
      agree += a[k] == b[k];
      ca[a[k]] += 1;
      cb[b[k]] += 1;
    }
    const double nn = static_cast<double>(a.size());
    double pe = 0;
    for (const auto& l : labels) pe += (ca[l] / nn) * (cb[l] / nn);
    const double po = agree / nn;
    if (pe == 1.0) continue;
    EXPECT_NEAR(cohen_kappa(a, b), (po - pe) / (1 - pe), 1e-12);
  }
}

// ---- records ---------------------------------------------------------------

ObfuscationRecord make_record(std::size_t i, Variant v = Variant::Base) {
  ObfuscationRecord r;
  r.id = "rec-" + std::to_string(i);
  r.task = static_cast<Task>(i % 4);
  r.variant = v;
  r.question_text = "question " + std::to_string(i) + " with \"quotes\" and \xC3\xA9";
  r.payload = {{"n", i}, {"list", {1, 2, 3}}};
  r.answer = "answer " + std::to_string(i % 7);
  r.provenance = {{"seed", 42}, {"steps", json::array({"a", "b"})}};
  return r;
}

TEST(Records, RoundTripThousand) {
  std::vector<ObfuscationRecord> rs;
  for (std::size_t i = 0; i < 1000; ++i) rs.push_back(make_record(i));
  std::stringstream ss;
  write_records(ss, rs);
  EXPECT_EQ(read_records(ss), rs);
}

TEST(Records, SchemaViolationLine) {
  std::stringstream ss;
  std::vector<ObfuscationRecord> rs;
  for (std::size_t i = 0; i < 6; ++i) rs.push_back(make_record(i));
  write_records(ss, rs);
  ss.seekp(0, std::ios::end);
  ss << "{\"id\": 3}\n";
  ss.seekg(0);
  try {
    read_records(ss);
    FAIL() << "expected SchemaViolation";
  } catch (const SchemaViolation& e) {
    EXPECT_EQ(e.line(), 7u);
  }
  std::stringstream bad("{not json\n");
  EXPECT_THROW(read_records(bad), SchemaViolation);
  std::stringstream enum_bad(R"({"id":"x","task":"poetry","variant":"base","question_text":"q","payload":{},"answer":"a","provenance":{}})");
  EXPECT_THROW(read_records(enum_bad), SchemaViolation);
}

TEST(Records, AnswerInvarianceEnforcedOnWrite) {
  auto base = make_record(1);
  auto obf = base;
  obf.variant = Variant::Obf;
  obf.answer = "something else";
  std::stringstream ss;
  EXPECT_THROW(write_records(ss, {base, obf}), AnswerMismatch);
  obf.answer = base.answer;
  EXPECT_NO_THROW(write_records(ss, {base, obf}));
}

TEST(Records, MappingLogStillDecodes) {
  series::SeriesInstance s;
  s.terms = {2, 4, std::nullopt, 8};
  const auto e = series::encode(s, series::EncoderType::CodepointSum);
  ObfuscationRecord r = make_record(2);
  r.task = Task::NumberSeries;
  r.payload = {{"terms", e.terms}};
  json log = json::array();
  for (const auto& m : e.log.entries) {
    log.push_back({{"original", m.original ? json(*m.original) : json("?")},
                   {"surface", m.surface}});
  }
  r.provenance = {{"mapping_log", log}};
  std::stringstream ss;
  write_records(ss, {r});
  const auto back = read_records(ss).front();
  const auto terms = back.payload.at("terms").get<std::vector<std::string>>();
  EXPECT_EQ(series::decode_terms(terms, series::EncoderType::CodepointSum), s.terms);
  EXPECT_EQ(back.provenance, r.provenance);
}

TEST(Records, EnumNames) {
  for (auto t : {Task::Fol, Task::BloodRelation, Task::NumberSeries, Task::Direction}) {
    EXPECT_EQ(parse_task(task_name(t)), t);
  }
  for (auto v : {Variant::Base, Variant::Obf, Variant::ObfL1, Variant::ObfL2, Variant::Type1,
                 Variant::Type2, Variant::Type3}) {
    EXPECT_EQ(parse_variant(variant_name(v)), v);
  }
}

TEST(Predictions, RoundTrip) {
  std::vector<Prediction> ps = {{"a", Variant::Obf, "Mother"}, {"b", std::nullopt, "5.83"}};
  std::stringstream ss;
  write_predictions(ss, ps);
  const auto back = read_predictions(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].variant, Variant::Obf);
  EXPECT_FALSE(back[1].variant.has_value());
  EXPECT_EQ(back[1].prediction, "5.83");
}

// ---- scoring ---------------------------------------------------------------

std::vector<ObfuscationRecord> corpus() {
  std::vector<ObfuscationRecord> rs;
  const std::vector<std::pair<Task, std::vector<Variant>>> layout = {
      {Task::Fol, {Variant::Base, Variant::Obf}},
      {Task::BloodRelation, {Variant::Base, Variant::ObfL1, Variant::ObfL2}},
      {Task::NumberSeries, {Variant::Base, Variant::Type1, Variant::Type2, Variant::Type3}},
      {Task::Direction, {Variant::Base, Variant::Obf}},
  };
  for (const auto& [task, variants] : layout) {
    for (int i = 0; i < 4; ++i) {
      for (auto v : variants) {
        ObfuscationRecord r;
        r.id = std::string(task_name(task)) + "-" + std::to_string(i);
        r.task = task;
        r.variant = v;
        r.question_text = r.id + "/" + std::string(variant_name(v));
        r.answer = "gold " + std::to_string(i);
        rs.push_back(r);
      }
    }
  }
  return rs;
}

TEST(Scoring, EchoGoldIsPerfect) {
  const auto rs = corpus();
  auto client = MockClient::echo_gold(rs);
  const auto preds = collect_predictions(rs, client);
  const auto report = score_predictions(rs, preds);
  for (const auto& [task, row] : report.cells) {
    for (const auto& [variant, cell] : row) EXPECT_EQ(cell.accuracy(), 1.0) << task << variant;
  }
  for (const auto& [task, d] : report.degradation) EXPECT_EQ(d, 0.0);
  ASSERT_TRUE(report.mean_degradation.has_value());
  EXPECT_EQ(*report.mean_degradation, 0.0);
}

TEST(Scoring, RetriesTransientFailures) {
  const auto rs = corpus();
  auto client = MockClient::echo_gold(rs, 2);
  ClientOptions opts;
  opts.initial_backoff = std::chrono::milliseconds(1);
  const auto preds = collect_predictions(rs, client, opts);
  EXPECT_EQ(client.calls(), rs.size() * 3);
  EXPECT_EQ(score_predictions(rs, preds).cells.at("fol").at("obf").accuracy(), 1.0);
}

TEST(Scoring, GivesUpAfterRetries) {
  const auto rs = corpus();
  auto client = MockClient::echo_gold(rs, 10);
  ClientOptions opts;
  opts.max_retries = 2;
  opts.initial_backoff = std::chrono::milliseconds(1);
  EXPECT_THROW(collect_predictions(rs, client, opts), ClientFailure);
}

TEST(Scoring, OneWrongBloodRelation) {
  std::vector<ObfuscationRecord> rs;
  std::vector<Prediction> ps;
  for (int i = 0; i < 4; ++i) {
    ObfuscationRecord r;
    r.id = "br-" + std::to_string(i);
    r.task = Task::BloodRelation;
    r.answer = "Brother";
    rs.push_back(r);
    ps.push_back({r.id, Variant::Base, i == 2 ? "Father" : "brother"});
  }
  EXPECT_DOUBLE_EQ(score_predictions(rs, ps).cells.at("blood_relation").at("base").accuracy(), 0.75);
}

TEST(Scoring, BaseFailureGivesPositiveDegradation) {
  const auto rs = corpus();
  std::vector<Prediction> ps;
  for (const auto& r : rs) {
    const bool wrong = r.task == Task::Fol && r.variant == Variant::Base && r.id != "fol-0";
    ps.push_back({r.id, r.variant, wrong ? "nope" : r.answer});
  }
  const auto report = score_predictions(rs, ps);
  EXPECT_GT(report.degradation.at("fol"), 0.0);
  EXPECT_EQ(report.degradation.at("direction"), 0.0);
}

TEST(Scoring, MissingPrediction) {
  const auto rs = corpus();
  std::vector<Prediction> ps;
  for (std::size_t i = 1; i < rs.size(); ++i) ps.push_back({rs[i].id, rs[i].variant, rs[i].answer});
  EXPECT_THROW(score_predictions(rs, ps), MissingPrediction);
}

TEST(Scoring, OrderIndependent) {
  auto rs = corpus();
  std::vector<Prediction> ps;
  SeededRng rng(3);
  for (const auto& r : rs) ps.push_back({r.id, r.variant, rng.coin() ? r.answer : "x"});
  const auto expected = score_predictions(rs, ps).to_json().dump();
  std::mt19937 g(5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(rs.begin(), rs.end(), g);
    std::shuffle(ps.begin(), ps.end(), g);
    EXPECT_EQ(score_predictions(rs, ps).to_json().dump(), expected);
  }
}

TEST(Scoring, ConcurrencyBounded) {
  const auto rs = corpus();
  std::atomic<int> in_flight{0};
  std::atomic<int> peak{0};
  std::map<std::string, std::string> gold;
  for (const auto& r : rs) gold[r.question_text] = r.answer;
  MockClient client([&](const std::string& q) {
    const int now = ++in_flight;
    int prev = peak.load();
    while (now > prev && !peak.compare_exchange_weak(prev, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
    --in_flight;
    return gold.at(q);
  });
  ClientOptions opts;
  opts.max_in_flight = 3;
  const auto preds = collect_predictions(rs, client, opts);
  EXPECT_LE(peak.load(), 3);
  ASSERT_EQ(preds.size(), rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_EQ(preds[i].id, rs[i].id);
}

TEST(Scoring, TableLayout) {
  const auto rs = corpus();
  auto client = MockClient::echo_gold(rs);
  const auto table = score_predictions(rs, collect_predictions(rs, client)).to_table();
  EXPECT_NE(table.find("blood_relation  obf_l2"), std::string::npos);
  EXPECT_NE(table.find("degradation  mean"), std::string::npos);
}

}  // namespace
}  // namespace logobf::bench
