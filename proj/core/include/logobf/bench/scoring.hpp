#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logobf/bench/records.hpp"

namespace logobf::bench {

class MissingPrediction : public Error {
 public:
  explicit MissingPrediction(const std::string& id);
};

class ClientFailure : public Error {
 public:
  using Error::Error;
};

/// A failure worth retrying (timeouts, rate limits).
class TransientClientError : public Error {
 public:
  using Error::Error;
};

/// Sends one question, returns the model's answer string. Implementations
/// must be safe to call from several threads at once.
class ModelClient {
 public:
  virtual ~ModelClient() = default;
  virtual std::string complete(const std::string& question) = 0;
};

/// Deterministic client for tests. Answers come from `responder`; the first
/// `transient_failures` calls for each distinct question throw
/// TransientClientError.
class MockClient : public ModelClient {
 public:
  using Responder = std::function<std::string(const std::string& question)>;

  explicit MockClient(Responder responder, int transient_failures = 0);

  /// Answers every question with the gold answer of the record asking it.
  static MockClient echo_gold(const std::vector<ObfuscationRecord>& records,
                              int transient_failures = 0);

  std::string complete(const std::string& question) override;
  std::size_t calls() const;

 private:
  Responder responder_;
  int transient_failures_;
  mutable std::mutex mu_;
  std::map<std::string, int> failures_seen_;
  std::size_t calls_ = 0;
};

struct ClientOptions {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{50};
  std::size_t max_in_flight = 4;
};

/// Asks `client` every record's question with at most `max_in_flight`
/// requests outstanding. Predictions come back in record order with the
/// record's variant set.
std::vector<Prediction> collect_predictions(const std::vector<ObfuscationRecord>& records,
                                            ModelClient& client, const ClientOptions& opts = {});

struct CellScore {
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
};

struct ScoreReport {
  /// task name -> variant name -> score
  std::map<std::string, std::map<std::string, CellScore>> cells;
  /// task name -> percent change of obfuscated variants vs base; tasks
  /// without a base variant, an obfuscated variant, or with zero base
  /// accuracy are absent.
  std::map<std::string, double> degradation;
  std::optional<double> mean_degradation;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Exact-match scoring. Every record needs a prediction, matched on
/// (id, variant) or on id alone when the prediction omits the variant.
ScoreReport score_predictions(const std::vector<ObfuscationRecord>& records,
                              const std::vector<Prediction>& predictions);

}  // namespace logobf::bench
