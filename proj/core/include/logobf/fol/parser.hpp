#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/fol/formula.hpp"

namespace logobf::fol {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);

  /// Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Parses the ASCII grammar:
///
///   formula := impl ('<->' impl)*              left-associative
///   impl    := or ('->' impl)?                 right-associative
///   or      := and ('|' and)*
///   and     := unary ('&' unary)*
///   unary   := '~' unary | quant | primary
///   quant   := ('forall' | 'exists') IDENT '.' formula
///   primary := '(' formula ')' | '$T' | '$F' | IDENT '(' [term (',' term)*] ')'
///
/// A quantifier body extends as far right as possible. Unbound term names
/// starting with u..z become free variables, other unbound names constants.
Formula parse_formula(std::string_view text);

}  // namespace logobf::fol
