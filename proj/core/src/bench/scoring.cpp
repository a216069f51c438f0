#include "logobf/bench/scoring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include "logobf/bench/metrics.hpp"
#include "logobf/bench/normalize.hpp"

namespace logobf::bench {

MissingPrediction::MissingPrediction(const std::string& id)
    : Error("no prediction for record '" + id + "'") {}

MockClient::MockClient(Responder responder, int transient_failures)
    : responder_(std::move(responder)), transient_failures_(transient_failures) {}

MockClient MockClient::echo_gold(const std::vector<ObfuscationRecord>& records,
                                 int transient_failures) {
  std::map<std::string, std::string> gold;
  for (const auto& r : records) gold.emplace(r.question_text, r.answer);
  return MockClient(
      [gold = std::move(gold)](const std::string& q) {
        auto it = gold.find(q);
        return it == gold.end() ? std::string() : it->second;
      },
      transient_failures);
}

std::string MockClient::complete(const std::string& question) {
  {
    std::lock_guard lock(mu_);
    ++calls_;
    int& seen = failures_seen_[question];
    if (seen < transient_failures_) {
      ++seen;
      throw TransientClientError("mock transient failure");
    }
  }
  return responder_(question);
}

std::size_t MockClient::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

std::vector<Prediction> collect_predictions(const std::vector<ObfuscationRecord>& records,
                                            ModelClient& client, const ClientOptions& opts) {
  const std::size_t n = records.size();
  std::vector<Prediction> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& r = records[i];
      out[i].id = r.id;
      out[i].variant = r.variant;
      auto backoff = opts.initial_backoff;
      for (int attempt = 0;; ++attempt) {
        try {
          out[i].prediction = client.complete(r.question_text);
          break;
        } catch (const TransientClientError&) {
          if (attempt >= opts.max_retries) {
            errors[i] = std::make_exception_ptr(
                ClientFailure("record '" + r.id + "' failed after " +
                              std::to_string(opts.max_retries) + " retries"));
            break;
          }
          std::this_thread::sleep_for(backoff);
          backoff *= 2;
        } catch (...) {
          errors[i] = std::current_exception();
          break;
        }
      }
    }
  };

  const std::size_t threads = std::min<std::size_t>(std::max<std::size_t>(opts.max_in_flight, 1), n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  if (threads > 0) worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

ScoreReport score_predictions(const std::vector<ObfuscationRecord>& records,
                              const std::vector<Prediction>& predictions) {
  std::map<std::string, std::size_t> id_count;
  for (const auto& r : records) ++id_count[r.id];

  std::map<std::pair<std::string, Variant>, const std::string*> by_variant;
  std::map<std::string, const std::string*> by_id;
  for (const auto& p : predictions) {
    if (p.variant) {
      by_variant[{p.id, *p.variant}] = &p.prediction;
    } else {
      if (id_count[p.id] > 1) {
        throw InvalidArgument("prediction for shared id '" + p.id + "' must name its variant");
      }
      by_id[p.id] = &p.prediction;
    }
  }

  ScoreReport rep;
  for (const auto& r : records) {
    const std::string* pred = nullptr;
    if (auto it = by_variant.find({r.id, r.variant}); it != by_variant.end()) {
      pred = it->second;
    } else if (auto jt = by_id.find(r.id); jt != by_id.end()) {
      pred = jt->second;
    }
    if (!pred) throw MissingPrediction(r.id + "/" + std::string(variant_name(r.variant)));
    CellScore& cell = rep.cells[std::string(task_name(r.task))][std::string(variant_name(r.variant))];
    ++cell.total;
    if (normalize(*pred) == normalize(r.answer)) ++cell.correct;
  }

  double sum = 0.0;
  std::size_t tasks = 0;
  for (const auto& [task, variants] : rep.cells) {
    auto base = variants.find("base");
    if (base == variants.end() || base->second.accuracy() <= 0.0) continue;
    TaskAccuracy acc;
    acc.base = base->second.accuracy();
    for (const auto& [variant, cell] : variants) {
      if (variant != "base") acc.obfuscated.push_back(cell.accuracy());
    }
    if (acc.obfuscated.empty()) continue;
    const double d = task_degradation(acc);
    rep.degradation[task] = d;
    sum += d;
    ++tasks;
  }
  if (tasks > 0) rep.mean_degradation = sum / static_cast<double>(tasks);
  return rep;
}

nlohmann::json ScoreReport::to_json() const {
  nlohmann::json j;
  j["accuracy"] = nlohmann::json::object();
  for (const auto& [task, variants] : cells) {
    for (const auto& [variant, cell] : variants) {
      j["accuracy"][task][variant] = {
          {"correct", cell.correct}, {"total", cell.total}, {"accuracy", cell.accuracy()}};
    }
  }
  j["degradation_percent"] = degradation;
  j["mean_degradation_percent"] =
      mean_degradation ? nlohmann::json(*mean_degradation) : nlohmann::json(nullptr);
  return j;
}

std::string ScoreReport::to_table() const {
  struct Row {
    std::string task, variant, correct, total, accuracy;
  };
  std::vector<Row> rows{{"task", "variant", "correct", "total", "accuracy"}};
  char buf[32];
  for (const auto& [task, variants] : cells) {
    for (const auto& [variant, cell] : variants) {
      std::snprintf(buf, sizeof buf, "%.4f", cell.accuracy());
      rows.push_back({task, variant, std::to_string(cell.correct), std::to_string(cell.total), buf});
    }
  }
  std::size_t w[5] = {0, 0, 0, 0, 0};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], r.task.size());
    w[1] = std::max(w[1], r.variant.size());
    w[2] = std::max(w[2], r.correct.size());
    w[3] = std::max(w[3], r.total.size());
    w[4] = std::max(w[4], r.accuracy.size());
  }
  auto pad = [](const std::string& s, std::size_t width, bool right) {
    const std::string fill(width - s.size(), ' ');
    return right ? fill + s : s + fill;
  };
  std::string out;
  for (const auto& r : rows) {
    out += pad(r.task, w[0], false) + "  " + pad(r.variant, w[1], false) + "  " +
           pad(r.correct, w[2], true) + "  " + pad(r.total, w[3], true) + "  " +
           pad(r.accuracy, w[4], true) + "\n";
  }
  if (!degradation.empty()) {
    out += "\n";
    std::size_t tw = 0;
    for (const auto& [task, d] : degradation) tw = std::max(tw, task.size());
    for (const auto& [task, d] : degradation) {
      std::snprintf(buf, sizeof buf, "%+.2f%%", d);
      out += "degradation  " + pad(task, tw, false) + "  " + buf + "\n";
    }
    if (mean_degradation) {
      std::snprintf(buf, sizeof buf, "%+.2f%%", *mean_degradation);
      out += "degradation  " + pad("mean", tw, false) + "  " + buf + "\n";
    }
  }
  return out;
}

}  // namespace logobf::bench
