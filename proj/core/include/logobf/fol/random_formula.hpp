#pragma once

#include <cstddef>
#include <cstdint>

#include "logobf/common/rng.hpp"
#include "logobf/fol/formula.hpp"

namespace logobf::fol {

struct RandomFormulaOptions {
  std::size_t max_depth = 5;
  std::size_t max_predicates = 3;
  /// Binary predicates dominate the cost of finite-model checking, so their
  /// number is capped separately.
  std::size_t max_binary_predicates = 1;
  /// Quantified variables are drawn from x, y, ... up to this count.
  std::size_t max_variables = 2;
  bool allow_constant = true;
};

/// Random closed formula. Every predicate symbol has arity 1 or 2.
Formula random_formula(SeededRng& rng, const RandomFormulaOptions& opts = {});

/// Random quantifier-free, constant-free formula over 0-ary predicates
/// P0..P{atoms-1}.
Formula random_propositional(SeededRng& rng, std::size_t atoms, std::size_t max_depth);

}  // namespace logobf::fol
