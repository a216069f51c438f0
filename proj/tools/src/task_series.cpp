#include "common.hpp"
#include "logobf/series/encoder.hpp"
#include "tasks.hpp"

namespace logobf::cli {

namespace {

using nlohmann::json;

std::vector<std::optional<std::int64_t>> terms_from(const json& j) {
  if (j.is_string()) return series::parse_terms(j.get<std::string>());
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& t : j) {
    if (t.is_null() || (t.is_string() && t.get<std::string>() == "?")) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(t.get<std::int64_t>());
    }
  }
  return out;
}

json terms_json(const std::vector<std::optional<std::int64_t>>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(t ? json(*t) : json("?"));
  return out;
}

bench::Variant variant_for(int type) {
  switch (type) {
    case 1: return bench::Variant::Type1;
    case 2: return bench::Variant::Type2;
    default: return bench::Variant::Type3;
  }
}

}  // namespace

Generated encode_series(const bench::ObfuscationRecord& base, const SeriesParams& p) {
  series::SeriesInstance s;
  s.terms = terms_from(base.payload.at("terms"));
  const auto type = series::encoder_from_number(p.type);
  const auto e = series::encode(s, type);

  Generated g;
  auto& r = g.record;
  r.id = base.id;
  r.task = bench::Task::NumberSeries;
  r.variant = variant_for(p.type);
  r.question_text = "Find the missing term (?) in the series: " + e.text();
  r.payload = {{"terms", e.terms}, {"encoder", series::encoder_name(type)}};
  r.answer = base.answer;

  json log = json::array();
  for (const auto& m : e.log.entries) {
    json entry = {{"original", m.original ? json(*m.original) : json("?")},
                  {"surface", m.surface}};
    if (!m.intermediate.empty()) entry["intermediate"] = m.intermediate;
    log.push_back(std::move(entry));
  }
  r.provenance = {{"seed", p.seed},
                  {"type", p.type},
                  {"base_terms", terms_json(s.terms)},
                  {"mapping_log", log}};
  return g;
}

std::optional<std::string> verify_series(const bench::ObfuscationRecord& r) {
  series::EncodedSeries e;
  e.encoder = series::encoder_from_number(r.provenance.at("type").get<int>());
  e.terms = r.payload.at("terms").get<std::vector<std::string>>();
  for (const auto& m : r.provenance.at("mapping_log")) {
    series::MappingEntry entry;
    entry.encoder = e.encoder;
    const auto& o = m.at("original");
    if (!o.is_string()) entry.original = o.get<std::int64_t>();
    entry.surface = m.at("surface").get<std::string>();
    if (m.contains("intermediate")) {
      entry.intermediate = m.at("intermediate").get<std::vector<std::string>>();
    }
    e.log.entries.push_back(std::move(entry));
  }
  const auto base_terms = terms_from(r.provenance.at("base_terms"));
  try {
    if (series::decode(e).terms != base_terms) return "decoded terms differ from the base";
    // Log-free inversion must agree too.
    std::int64_t max_term = 0;
    for (const auto& t : base_terms) {
      if (t) max_term = std::max(max_term, *t);
    }
    const series::DigestTable digests(e.encoder == series::EncoderType::Md5 ? max_term : 0);
    if (series::decode_terms(e.terms, e.encoder, &digests) != base_terms) {
      return "log-free decoding differs from the base";
    }
  } catch (const Error& ex) {
    return ex.what();
  }
  return std::nullopt;
}

}  // namespace logobf::cli
