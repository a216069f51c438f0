#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/kinship/chain.hpp"

namespace logobf::kin {

/// "<target> is the <chain> of <anchor>". For speaker-anchored chains the
/// anchor is the speaker's name.
struct Statement {
  std::string target;
  std::string anchor;
  RelationChain chain;
  Gender target_gender = Gender::Unknown;
};

/// Supported templates:
///   "X is the <chain> of Y" clauses separated by ',', '.', ';' or "and"
///   "Pointing towards a boy, V said He is the <chain>" (chain may use "my")
///   "How is X related to Y?"
/// Without a question the last statement is the query: how is its target
/// related to its anchor.
struct Puzzle {
  std::string text;
  std::vector<Statement> statements;
  std::string query_target;
  std::string query_anchor;
};

class PuzzleSyntaxError : public Error {
 public:
  PuzzleSyntaxError(std::string message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Puzzle parse_puzzle(std::string_view text);

}  // namespace logobf::kin
