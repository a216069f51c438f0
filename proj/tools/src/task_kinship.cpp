#include "common.hpp"
#include "logobf/kinship/puzzle.hpp"
#include "tasks.hpp"

namespace logobf::cli {

namespace {

using nlohmann::json;

std::string puzzle_text(const bench::ObfuscationRecord& r) {
  if (r.payload.is_object() && r.payload.contains("puzzle")) {
    return r.payload.at("puzzle").get<std::string>();
  }
  return r.question_text;
}

json assumption_to_json(const kin::Assumption& a) {
  if (a.type == kin::Assumption::Type::Reading) {
    return {{"type", "reading"}, {"step", a.step}, {"reading", a.reading}, {"note", a.note}};
  }
  return {{"type", "excludes"}, {"relation", kin::kind_name(a.excluded)}, {"note", a.note}};
}

kin::Assumption assumption_from_json(const json& j) {
  kin::Assumption a;
  if (j.at("type").get<std::string>() == "reading") {
    a.type = kin::Assumption::Type::Reading;
    a.step = j.at("step").get<std::size_t>();
    a.reading = j.at("reading").get<std::string>();
  } else {
    a.type = kin::Assumption::Type::Excludes;
    a.excluded = kin::parse_kind(j.at("relation").get<std::string>());
  }
  a.note = j.value("note", "");
  return a;
}

json verdict_json(const kin::KinshipVerdict& v) {
  json j = {{"verdict", kin::verdict_name(v.kind)}};
  if (v.base) j["base_relation"] = kin::relation_name(*v.base);
  if (v.obfuscated) j["obfuscated_relation"] = kin::relation_name(*v.obfuscated);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace

Generated obfuscate_kinship(const bench::ObfuscationRecord& base, const KinshipParams& p) {
  const std::string text = puzzle_text(base);
  const kin::Puzzle puzzle = kin::parse_puzzle(text);
  const std::uint64_t seed = record_seed(p.seed, base.id);
  const auto sub = kin::substitute_once(
      puzzle, p.level, seed, p.table ? *p.table : kin::SubstitutionTable::builtin());
  const auto& prov = sub.provenance;

  Generated g;
  auto& r = g.record;
  r.id = base.id;
  r.task = bench::Task::BloodRelation;
  r.variant = p.level == kin::Level::L1 ? bench::Variant::ObfL1 : bench::Variant::ObfL2;
  r.question_text = sub.text;
  r.payload = {{"puzzle", sub.text}};
  r.answer = base.answer;

  json assumptions = json::array();
  for (const auto& a : prov.assumptions) assumptions.push_back(assumption_to_json(a));
  r.provenance = {{"seed", p.seed},
                  {"record_seed", seed},
                  {"level", kin::level_name(p.level)},
                  {"base_puzzle", text},
                  {"substitution",
                   {{"word", prov.word},
                    {"substitution", prov.substitution},
                    {"offset", prov.offset},
                    {"original_length", prov.original_length},
                    {"statement", prov.statement},
                    {"first_step", prov.first_step},
                    {"step_count", prov.step_count},
                    {"assumptions", assumptions},
                    {"flagged", prov.flagged}}}};
  if (p.verify) {
    const auto v = kin::verify_kinship(puzzle, kin::parse_puzzle(sub.text), {prov.scope()});
    r.provenance["verification"] = verdict_json(v);
    if (v.kind != kin::KinshipVerdict::Kind::Equivalent) {
      g.failure = "'" + prov.word + "' -> '" + prov.substitution + "' is " +
                  std::string(kin::verdict_name(v.kind)) + (v.reason.empty() ? "" : ": " + v.reason);
    }
  } else {
    r.provenance["verification"] = {{"verdict", "skipped"}};
  }
  return g;
}

std::optional<std::string> verify_kinship_record(const bench::ObfuscationRecord& r) {
  const auto base = kin::parse_puzzle(r.provenance.at("base_puzzle").get<std::string>());
  const auto obf = kin::parse_puzzle(puzzle_text(r));
  const auto& s = r.provenance.at("substitution");

  // Single-edit check: the texts differ exactly by the recorded span.
  const auto offset = s.at("offset").get<std::size_t>();
  const auto original_length = s.at("original_length").get<std::size_t>();
  const auto inserted = s.at("substitution").get<std::string>();
  std::string rebuilt = base.text;
  if (offset + original_length > rebuilt.size()) return "substitution span is out of range";
  rebuilt.replace(offset, original_length, inserted);
  if (rebuilt != obf.text) return "obfuscated text is not a single recorded edit of the base";

  kin::ScopedAssumptions scope;
  scope.statement = s.at("statement").get<std::size_t>();
  scope.first_step = s.at("first_step").get<std::size_t>();
  scope.step_count = s.at("step_count").get<std::size_t>();
  for (const auto& a : s.at("assumptions")) scope.assumptions.push_back(assumption_from_json(a));

  const auto v = kin::verify_kinship(base, obf, {scope});
  if (v.kind == kin::KinshipVerdict::Kind::Equivalent) return std::nullopt;
  return std::string(kin::verdict_name(v.kind)) + (v.reason.empty() ? "" : ": " + v.reason);
}

}  // namespace logobf::cli
