#include <cctype>

#include "logobf/fol/parser.hpp"
#include "logobf/fol/render.hpp"
#include "logobf/obfuscator/equivalence.hpp"
#include "logobf/obfuscator/obfuscate.hpp"
#include "common.hpp"
#include "tasks.hpp"

namespace logobf::cli {

namespace {

using nlohmann::json;

fol::Label parse_label(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "true") return fol::Label::True;
  if (s == "false") return fol::Label::False;
  throw InvalidArgument("label must be True or False");
}

fol::Problem problem_from(const json& payload) {
  fol::Problem p;
  for (const auto& s : payload.at("premises")) p.premises.push_back(fol::parse_formula(s.get<std::string>()));
  p.conclusion = fol::parse_formula(payload.at("conclusion").get<std::string>());
  p.label = parse_label(payload.at("label").get<std::string>());
  fol::validate(p);
  return p;
}

json payload_of(const fol::Problem& p) {
  json premises = json::array();
  for (const auto& f : p.premises) premises.push_back(fol::render_formula(f, fol::Style::Ascii));
  return {{"premises", premises},
          {"conclusion", fol::render_formula(p.conclusion, fol::Style::Ascii)},
          {"label", p.label == fol::Label::True ? "True" : "False"}};
}

std::string question_of(const fol::Problem& p) {
  std::string q = "Premises:\n";
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    q += std::to_string(i + 1) + ". " + fol::render_formula(p.premises[i], fol::Style::Ascii) + "\n";
  }
  q += "Conclusion: " + fol::render_formula(p.conclusion, fol::Style::Ascii) + "\n";
  q += "Does the conclusion follow from the premises? Answer True or False.";
  return q;
}

json atom_to_json(const fol::Formula& a) {
  json args = json::array();
  for (const auto& t : a.args()) {
    args.push_back({{t.kind == fol::Term::Kind::Variable ? "var" : "const", t.name}});
  }
  return {{"predicate", a.name()}, {"args", args}};
}

fol::Formula atom_from_json(const json& j) {
  if (j.is_string()) return fol::parse_formula(j.get<std::string>());  // "$T"
  std::vector<fol::Term> args;
  for (const auto& t : j.at("args")) {
    if (t.contains("var")) {
      args.push_back(fol::Term::variable(t.at("var").get<std::string>()));
    } else {
      args.push_back(fol::Term::constant(t.at("const").get<std::string>()));
    }
  }
  return fol::pred(j.at("predicate").get<std::string>(), std::move(args));
}

json trace_to_json(const obf::RewriteTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j = {{"rule", obf::rule_name(s.rule.id)},
              {"direction", obf::direction_name(s.rule.direction)},
              {"position", s.position},
              {"before", fol::render_formula(s.before, fol::Style::Ascii)},
              {"after", fol::render_formula(s.after, fol::Style::Ascii)}};
    if (s.witness) {
      j["witness"] = s.witness->kind() == fol::NodeKind::Predicate
                         ? atom_to_json(*s.witness)
                         : json(fol::render_formula(*s.witness, fol::Style::Ascii));
    }
    steps.push_back(std::move(j));
  }
  return steps;
}

// Re-applies a recorded trace to `base`.
fol::Formula apply_trace(const fol::Formula& base, const json& steps) {
  fol::Formula f = base;
  for (const auto& s : steps) {
    const obf::RewriteRule rule{obf::parse_rule_id(s.at("rule").get<std::string>()),
                                obf::parse_direction(s.at("direction").get<std::string>())};
    const auto pos = s.at("position").get<fol::Path>();
    std::optional<fol::Formula> witness;
    if (s.contains("witness")) witness = atom_from_json(s.at("witness"));
    f = obf::apply_rewrite(rule, f, pos, witness);
  }
  return f;
}

// Equivalence of each premise pair. Returns the failure reason, if any, and
// fills `report`.
std::optional<std::string> check_premises(const fol::Problem& base, const fol::Problem& obf,
                                          std::size_t max_domain, json& report) {
  report = {{"max_domain", max_domain}, {"premises", json::array()}};
  std::optional<std::string> failure;
  bool inconclusive = false;
  for (std::size_t i = 0; i < base.premises.size(); ++i) {
    json entry;
    try {
      const auto v = obf::check_equivalence(base.premises[i], obf.premises[i], {max_domain});
      entry["verdict"] = obf::verdict_name(v.kind);
      if (v.kind == obf::EquivVerdict::Kind::EquivalentUpTo) entry["max_domain"] = v.max_domain;
      if (!v.equivalent()) {
        entry["counter_model_domain"] = v.counter_model->domain_size;
        if (!failure) failure = "premise " + std::to_string(i + 1) + " has a counter-model";
      }
    } catch (const obf::BudgetExceeded& e) {
      entry["verdict"] = "inconclusive";
      entry["checked_domain"] = e.largest_completed_domain();
      inconclusive = true;
    }
    report["premises"].push_back(std::move(entry));
  }
  report["status"] = failure ? "failed" : inconclusive ? "inconclusive" : "passed";
  return failure;
}

}  // namespace

Generated obfuscate_fol(const bench::ObfuscationRecord& base, const FolParams& p) {
  const fol::Problem problem = problem_from(base.payload);
  const std::uint64_t seed = record_seed(p.seed, base.id);
  const auto result = obf::obfuscate_premises(problem, seed, p.min_rules);

  Generated g;
  auto& r = g.record;
  r.id = base.id;
  r.task = bench::Task::Fol;
  r.variant = bench::Variant::Obf;
  r.question_text = question_of(result.problem);
  r.payload = payload_of(result.problem);
  r.answer = base.answer;
  json traces = json::array();
  for (const auto& t : result.traces) traces.push_back(trace_to_json(t));
  r.provenance = {{"seed", p.seed},
                  {"record_seed", seed},
                  {"min_rules", p.min_rules},
                  {"base_payload", payload_of(problem)},
                  {"traces", traces}};
  if (p.verify) {
    json report;
    g.failure = check_premises(problem, result.problem, p.max_domain, report);
    r.provenance["verification"] = report;
  } else {
    r.provenance["verification"] = {{"status", "skipped"}};
  }
  return g;
}

std::optional<std::string> verify_fol(const bench::ObfuscationRecord& r, std::size_t max_domain) {
  const fol::Problem base = problem_from(r.provenance.at("base_payload"));
  const fol::Problem obf = problem_from(r.payload);
  if (base.premises.size() != obf.premises.size()) return "premise counts differ";
  if (!(base.conclusion == obf.conclusion) || base.label != obf.label) {
    return "conclusion or label changed";
  }
  const auto& traces = r.provenance.at("traces");
  if (traces.size() != base.premises.size()) return "trace count differs from premise count";
  for (std::size_t i = 0; i < base.premises.size(); ++i) {
    try {
      if (!(apply_trace(base.premises[i], traces[i]) == obf.premises[i])) {
        return "trace of premise " + std::to_string(i + 1) + " does not reproduce it";
      }
    } catch (const Error& e) {
      return "trace of premise " + std::to_string(i + 1) + ": " + e.what();
    }
  }
  json report;
  return check_premises(base, obf, max_domain, report);
}

std::string fol_prover9(const bench::ObfuscationRecord& r) {
  return fol::render_prover9_problem(problem_from(r.payload));
}

}  // namespace logobf::cli
