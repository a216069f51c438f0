#include "logobf/obfuscator/obfuscate.hpp"

#include <algorithm>

namespace logobf::obf {

std::vector<Formula> problem_atoms(const fol::Problem& p) {
  std::vector<Formula> out;
  auto add = [&](const Formula& f) {
    for (const auto& a : fol::atoms(f)) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  };
  for (const auto& f : p.premises) add(f);
  add(p.conclusion);
  return out;
}

std::pair<Formula, RewriteTrace> obfuscate_formula(const Formula& f, SeededRng& rng,
                                                   const ObfuscationOptions& opts,
                                                   const std::vector<Formula>& witness_pool) {
  if (opts.min_rules == 0) throw InvalidArgument("min_rules must be at least 1");
  // Every step keeps two nodes per remaining step in reserve, so a
  // double-negation introduction always fits and the chain cannot dead-end.
  const std::size_t cap = std::max(opts.growth_cap * f.size(), f.size() + 2 * opts.min_rules);
  Formula cur = f;
  RewriteTrace trace;
  std::vector<Formula> seen{f};

  while (trace.steps.size() < opts.min_rules) {
    auto sites = enumerate_applicable(cur, opts.catalog);
    bool done = false;
    while (!sites.empty() && !done) {
      const std::size_t pick = rng.index(sites.size());
      const Site site = sites[pick];
      sites.erase(sites.begin() + static_cast<std::ptrdiff_t>(pick));

      std::optional<Formula> witness;
      if (site.rule.id == RuleId::TautologyInject &&
          site.rule.direction == Direction::Forward) {
        if (!witness_pool.empty()) {
          witness = witness_pool[rng.index(witness_pool.size())];
        } else {
          witness = fol::atoms(fol::subformula_at(cur, site.position)).empty()
                        ? fol::top()
                        : fol::atoms(fol::subformula_at(cur, site.position)).front();
        }
      }
      Formula next = cur;
      try {
        next = apply_rewrite(site.rule, cur, site.position, witness);
      } catch (const RuleNotApplicable&) {
        continue;  // witness constant shadowed at this site
      }
      const std::size_t remaining = opts.min_rules - trace.steps.size() - 1;
      if (next.size() + 2 * remaining > cap) continue;
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;

      trace.steps.push_back({site.rule, site.position, fol::subformula_at(cur, site.position),
                             fol::subformula_at(next, site.position), witness});
      seen.push_back(next);
      cur = std::move(next);
      done = true;
    }
    if (!done) {
      throw ObfuscationStalled("no admissible rewrite after " +
                               std::to_string(trace.steps.size()) + " steps");
    }
  }
  return {cur, std::move(trace)};
}

ObfuscatedProblem obfuscate_premises(const fol::Problem& p, std::uint64_t seed,
                                     std::size_t min_rules) {
  ObfuscationOptions opts;
  opts.min_rules = min_rules;
  return obfuscate_premises(p, seed, opts);
}

ObfuscatedProblem obfuscate_premises(const fol::Problem& p, std::uint64_t seed,
                                     const ObfuscationOptions& opts) {
  if (p.premises.empty()) throw InvalidArgument("problem has no premises");
  SeededRng rng(seed);
  const auto pool = problem_atoms(p);
  ObfuscatedProblem out;
  out.problem.conclusion = p.conclusion;
  out.problem.label = p.label;
  for (const auto& premise : p.premises) {
    auto [f, trace] = obfuscate_formula(premise, rng, opts, pool);
    out.problem.premises.push_back(std::move(f));
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace logobf::obf
