#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "logobf/common/rng.hpp"
#include "logobf/obfuscator/equivalence.hpp"
#include "logobf/obfuscator/rewrite.hpp"

namespace logobf::obf {

class ObfuscationStalled : public Error {
 public:
  using Error::Error;
};

struct ObfuscationOptions {
  std::size_t min_rules = 4;
  /// Steps that would grow a premise beyond growth_cap times its original
  /// node count are rejected. The cap never drops below the original size
  /// plus two nodes per required step.
  std::size_t growth_cap = 12;
  std::vector<RewriteRule> catalog = full_catalog();
};

/// Applies exactly opts.min_rules seeded steps to `f`. A step is drawn
/// uniformly from enumerate_applicable; steps that exceed the size cap or
/// return to a formula already seen in this chain are rejected and another
/// site is drawn. TautologyInject witnesses are drawn from `witness_pool`
/// (the first atom of the target when the pool is empty).
std::pair<Formula, RewriteTrace> obfuscate_formula(const Formula& f, SeededRng& rng,
                                                   const ObfuscationOptions& opts,
                                                   const std::vector<Formula>& witness_pool);

struct ObfuscatedProblem {
  fol::Problem problem;
  std::vector<RewriteTrace> traces;  // one per premise
};

/// Obfuscates every premise; the conclusion and label are copied unchanged.
/// Witness atoms come from the whole problem, so no new predicate names
/// appear.
ObfuscatedProblem obfuscate_premises(const fol::Problem& p, std::uint64_t seed,
                                     std::size_t min_rules = 4);
ObfuscatedProblem obfuscate_premises(const fol::Problem& p, std::uint64_t seed,
                                     const ObfuscationOptions& opts);

/// Atoms of all premises and the conclusion, first occurrence order.
std::vector<Formula> problem_atoms(const fol::Problem& p);

}  // namespace logobf::obf
