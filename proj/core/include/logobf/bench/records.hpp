#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "logobf/common/error.hpp"

namespace logobf::bench {

enum class Task { Fol, BloodRelation, NumberSeries, Direction };
enum class Variant { Base, Obf, ObfL1, ObfL2, Type1, Type2, Type3 };

std::string_view task_name(Task t);  // "fol", "blood_relation", "number_series", "direction"
Task parse_task(std::string_view s);
std::string_view variant_name(Variant v);  // "base", "obf", "obf_l1", ...
Variant parse_variant(std::string_view s);

/// One benchmark question. Records of different variants that share an id
/// are renderings of the same problem and must carry the same answer.
struct ObfuscationRecord {
  std::string id;
  Task task = Task::Fol;
  Variant variant = Variant::Base;
  std::string question_text;
  nlohmann::json payload = nlohmann::json::object();
  std::string answer;
  nlohmann::json provenance = nlohmann::json::object();

  friend bool operator==(const ObfuscationRecord&, const ObfuscationRecord&) = default;
};

class SchemaViolation : public Error {
 public:
  SchemaViolation(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class AnswerMismatch : public Error {
 public:
  explicit AnswerMismatch(const std::string& id);
};

nlohmann::json record_to_json(const ObfuscationRecord& r);
/// Throws SchemaViolation with `line` on missing or mistyped fields.
ObfuscationRecord record_from_json(const nlohmann::json& j, std::size_t line = 0);

/// JSONL, one record per line; blank lines are skipped.
std::vector<ObfuscationRecord> read_records(std::istream& in);
std::vector<ObfuscationRecord> read_records(const std::filesystem::path& path);

/// Throws AnswerMismatch before writing anything if two records with the
/// same id disagree on the answer.
void write_records(std::ostream& out, const std::vector<ObfuscationRecord>& records);
void write_records(const std::filesystem::path& path,
                   const std::vector<ObfuscationRecord>& records);

void check_answer_invariance(const std::vector<ObfuscationRecord>& records);

/// A model answer for one record. `variant` may be omitted when the id is
/// unique among the scored records.
struct Prediction {
  std::string id;
  std::optional<Variant> variant;
  std::string prediction;
};

std::vector<Prediction> read_predictions(std::istream& in);
std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(std::ostream& out, const std::vector<Prediction>& preds);

}  // namespace logobf::bench
