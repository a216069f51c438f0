#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "logobf/common/error.hpp"

namespace logobf::fol {

// Function-free first-order logic. Terms are variables or constants.
//
// Naming convention (shared with Prover9): an identifier that is not bound by
// an enclosing quantifier is a free variable when it starts with u..z and a
// constant otherwise. Bound identifiers are always variables.
struct Term {
  enum class Kind : std::uint8_t { Variable, Constant };

  Kind kind = Kind::Constant;
  std::string name;

  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }

  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class NodeKind : std::uint8_t {
  Predicate,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ForAll,
  Exists,
  Bottom,
  Top,
};

bool is_binary(NodeKind k);
bool is_quantifier(NodeKind k);

/// Immutable formula tree with value semantics. Copies share structure.
class Formula {
 public:
  /// A default-constructed formula is Top.
  Formula();

  NodeKind kind() const { return node_->kind; }

  /// Predicate name for Predicate nodes, bound variable for quantifiers.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }

  std::size_t child_count() const { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  const Formula& operand() const { return child(0); }
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }
  const Formula& body() const { return child(0); }

  /// Total number of nodes in the tree (cached).
  std::size_t size() const { return node_->size; }
  /// Height of the tree; a leaf has depth 0.
  std::size_t depth() const { return node_->depth; }

  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula make_node(NodeKind, std::string, std::vector<Term>,
                           std::vector<Formula>);

 private:
  struct Node {
    NodeKind kind;
    std::string name;
    std::vector<Term> args;
    std::vector<Formula> children;
    std::size_t size;
    std::size_t depth;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Formula pred(std::string name, std::vector<Term> args = {});
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);
Formula bottom();
Formula top();

/// Rebuilds a node of the same kind as `like` with new children.
Formula with_children(const Formula& like, std::vector<Formula> children);

/// Unbound variables occurring in predicate arguments.
std::set<std::string> free_vars(const Formula& f);

/// Predicate name -> arity. Throws ArityError on inconsistent use.
std::map<std::string, std::size_t> predicate_signature(const Formula& f);
std::set<std::string> constants(const Formula& f);

/// Atomic subformulas in pre-order, without duplicates.
std::vector<Formula> atoms(const Formula& f);

bool is_quantifier_free(const Formula& f);

// Positions are paths of child indices from the root.
using Path = std::vector<std::uint8_t>;

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

const Formula& subformula_at(const Formula& f, const Path& path);
Formula replace_at(const Formula& f, const Path& path, Formula replacement);

/// Variables bound by quantifiers on the way from the root to `path`.
std::set<std::string> binders_along(const Formula& f, const Path& path);

enum class Label : std::uint8_t { False, True };

struct Problem {
  std::vector<Formula> premises;
  Formula conclusion;
  Label label = Label::True;

  friend bool operator==(const Problem&, const Problem&) = default;
};

class ArityError : public Error {
 public:
  ArityError(std::string predicate, std::size_t first, std::size_t second);
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

class WellFormednessError : public Error {
 public:
  using Error::Error;
};

bool is_free_variable_name(const std::string& name);
bool is_identifier(const std::string& s);

/// Checks naming conventions, arities and round-trip safety of one formula.
void validate(const Formula& f);
/// Also requires at least one premise and one arity per predicate name
/// across the whole problem.
void validate(const Problem& p);

std::map<std::string, std::size_t> problem_signature(const Problem& p);

}  // namespace logobf::fol
