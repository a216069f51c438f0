#pragma once

#include <string>
#include <string_view>

#include "logobf/fol/formula.hpp"

namespace logobf::fol {

enum class Style { Ascii, Unicode, Prover9, NlTemplate };

/// Ascii output re-parses to the same tree. Prover9 output is a single
/// formula terminated by '.'. NlTemplate is deterministic English built from
/// fixed connective phrases.
std::string render_formula(const Formula& f, Style style);

Style parse_style(std::string_view name);
std::string_view style_name(Style style);

/// Prover9 input file: premises as assumptions, conclusion as the goal.
std::string render_prover9_problem(const Problem& p);

}  // namespace logobf::fol
