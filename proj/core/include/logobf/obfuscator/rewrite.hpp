#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "logobf/fol/formula.hpp"

namespace logobf::obf {

using fol::Formula;
using fol::Path;

// One entry per line of the transformation catalog.
enum class RuleId : std::uint8_t {
  Contraposition,       // A -> B  ==  ~B -> ~A
  DoubleNegation,       // ~~A  ==  A
  DeMorganAnd,          // ~(A & B)  ==  ~A | ~B
  DeMorganOr,           // A | B  ==  ~(~A & ~B)
  ImplToDisj,           // A -> B  ==  ~A | B
  QuantifierDuality,    // forall x. A  ==  ~exists x. ~A  (and dually)
  BiconditionalExpand,  // A <-> B  ==  (A -> B) & (B -> A)
  Distribute,           // A & (B | C)  =>  (A & B) | (A & C)
  Absorb,               // A | (A & B)  =>  A
  ImplAsConj,           // A -> B  ==  ~(A & ~B)
  NnfNegatedImpl,       // ~(A -> B)  ==  A & ~B
  QuantifierCommute,    // forall x. forall y. A  =>  forall y. forall x. A
  TautologyInject,      // A  ==  A & (Q | ~Q)
};

inline constexpr std::size_t kRuleCount = 13;

enum class Direction : std::uint8_t { Forward, Backward };

struct RewriteRule {
  RuleId id;
  Direction direction = Direction::Forward;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

std::string_view rule_name(RuleId id);
RuleId parse_rule_id(std::string_view name);
std::string_view direction_name(Direction d);
Direction parse_direction(std::string_view name);

/// Distribute, Absorb and QuantifierCommute only rewrite forward.
bool has_backward(RuleId id);

/// Every valid (rule, direction) pair, forward before backward, in RuleId order.
const std::vector<RewriteRule>& full_catalog();

class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Whether `rule` matches the subformula at `position` of `f`.
bool applicable(const RewriteRule& rule, const Formula& f, const Path& position);

/// Rewrites the subformula at `position`; the rest of the tree is shared.
///
/// `witness` is the atom Q used by forward TautologyInject. When absent the
/// first atom of the rewritten subformula is used, or $T if it has none.
/// Variables of Q not bound at `position` are universally closed.
Formula apply_rewrite(const RewriteRule& rule, const Formula& f, const Path& position,
                      const std::optional<Formula>& witness = std::nullopt);

struct Site {
  RewriteRule rule;
  Path position;

  friend bool operator==(const Site&, const Site&) = default;
};

/// All sites where a catalog rule applies. Order: pre-order walk of the tree,
/// then catalog order at each node.
std::vector<Site> enumerate_applicable(const Formula& f,
                                       const std::vector<RewriteRule>& catalog);

struct RewriteStep {
  RewriteRule rule;
  Path position;
  Formula before;  // subformula at position before the step
  Formula after;   // subformula at position after the step
  std::optional<Formula> witness;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

/// Re-applies every step to `base`. Throws RuleNotApplicable if a recorded
/// fragment does not match what the rule produces.
Formula replay(const Formula& base, const RewriteTrace& trace);

}  // namespace logobf::obf
