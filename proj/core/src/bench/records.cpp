#include "logobf/bench/records.hpp"

#include <array>
#include <fstream>
#include <map>

namespace logobf::bench {

namespace {

constexpr std::array<std::string_view, 4> kTasks = {"fol", "blood_relation", "number_series",
                                                    "direction"};
constexpr std::array<std::string_view, 7> kVariants = {"base",  "obf",   "obf_l1", "obf_l2",
                                                       "type1", "type2", "type3"};

std::string required_string(const nlohmann::json& j, const char* key, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw SchemaViolation(line, std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

std::string_view task_name(Task t) { return kTasks[static_cast<std::size_t>(t)]; }

Task parse_task(std::string_view s) {
  for (std::size_t i = 0; i < kTasks.size(); ++i) {
    if (kTasks[i] == s) return static_cast<Task>(i);
  }
  throw InvalidArgument("unknown task '" + std::string(s) + "'");
}

std::string_view variant_name(Variant v) { return kVariants[static_cast<std::size_t>(v)]; }

Variant parse_variant(std::string_view s) {
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    if (kVariants[i] == s) return static_cast<Variant>(i);
  }
  throw InvalidArgument("unknown variant '" + std::string(s) + "'");
}

SchemaViolation::SchemaViolation(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

AnswerMismatch::AnswerMismatch(const std::string& id)
    : Error("records with id '" + id + "' disagree on the answer") {}

nlohmann::json record_to_json(const ObfuscationRecord& r) {
  return {{"id", r.id},
          {"task", task_name(r.task)},
          {"variant", variant_name(r.variant)},
          {"question_text", r.question_text},
          {"payload", r.payload},
          {"answer", r.answer},
          {"provenance", r.provenance}};
}

ObfuscationRecord record_from_json(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object()) throw SchemaViolation(line, "record must be a JSON object");
  ObfuscationRecord r;
  r.id = required_string(j, "id", line);
  if (r.id.empty()) throw SchemaViolation(line, "field 'id' is empty");
  try {
    r.task = parse_task(required_string(j, "task", line));
    r.variant = parse_variant(required_string(j, "variant", line));
  } catch (const InvalidArgument& e) {
    throw SchemaViolation(line, e.what());
  }
  r.question_text = required_string(j, "question_text", line);
  r.answer = required_string(j, "answer", line);
  if (auto it = j.find("payload"); it != j.end()) r.payload = *it;
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_object()) throw SchemaViolation(line, "field 'provenance' must be an object");
    r.provenance = *it;
  }
  return r;
}

std::vector<ObfuscationRecord> read_records(std::istream& in) {
  std::vector<ObfuscationRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaViolation(line, std::string("invalid JSON: ") + e.what());
    }
    out.push_back(record_from_json(j, line));
  }
  return out;
}

std::vector<ObfuscationRecord> read_records(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_records(in);
}

void check_answer_invariance(const std::vector<ObfuscationRecord>& records) {
  std::map<std::string, const std::string*> answers;
  for (const auto& r : records) {
    auto [it, inserted] = answers.emplace(r.id, &r.answer);
    if (!inserted && *it->second != r.answer) throw AnswerMismatch(r.id);
  }
}

void write_records(std::ostream& out, const std::vector<ObfuscationRecord>& records) {
  check_answer_invariance(records);
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  if (!out) throw Error("failed to write records");
}

void write_records(const std::filesystem::path& path,
                   const std::vector<ObfuscationRecord>& records) {
  check_answer_invariance(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_records(out, records);
}

std::vector<Prediction> read_predictions(std::istream& in) {
  std::vector<Prediction> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaViolation(line, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaViolation(line, "prediction must be a JSON object");
    Prediction p;
    p.id = required_string(j, "id", line);
    p.prediction = required_string(j, "prediction", line);
    if (j.contains("variant")) {
      try {
        p.variant = parse_variant(required_string(j, "variant", line));
      } catch (const InvalidArgument& e) {
        throw SchemaViolation(line, e.what());
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_predictions(in);
}

void write_predictions(std::ostream& out, const std::vector<Prediction>& preds) {
  for (const auto& p : preds) {
    nlohmann::json j = {{"id", p.id}, {"prediction", p.prediction}};
    if (p.variant) j["variant"] = variant_name(*p.variant);
    out << j.dump() << '\n';
  }
}

}  // namespace logobf::bench
