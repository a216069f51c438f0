#include "logobf/obfuscator/rewrite.hpp"

#include <array>
#include <string>

namespace logobf::obf {

using fol::NodeKind;

namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "contraposition",       "double-negation", "de-morgan-and",
    "de-morgan-or",         "impl-to-disj",    "quantifier-duality",
    "biconditional-expand", "distribute",      "absorb",
    "impl-as-conj",         "nnf-negated-impl", "quantifier-commute",
    "tautology-inject",
};

bool is(const Formula& f, NodeKind k) { return f.kind() == k; }

bool is_not_of(const Formula& f, NodeKind inner) {
  return is(f, NodeKind::Not) && is(f.operand(), inner);
}

// Strips universal closures: forall v1 ... forall vk. (Q | ~Q) -> Q | ~Q.
bool is_excluded_middle(const Formula& f) {
  const Formula* cur = &f;
  while (is(*cur, NodeKind::ForAll)) cur = &cur->body();
  return is(*cur, NodeKind::Or) && is(cur->rhs(), NodeKind::Not) &&
         cur->rhs().operand() == cur->lhs();
}

Formula first_atom_or_top(const Formula& f) {
  auto all = fol::atoms(f);
  return all.empty() ? fol::top() : all.front();
}

Formula excluded_middle(const Formula& q, const std::set<std::string>& binders) {
  for (const auto& c : fol::constants(q)) {
    if (binders.count(c)) {
      throw RuleNotApplicable("tautology witness constant '" + c +
                              "' is shadowed at the target position");
    }
  }
  Formula out = fol::disj(q, fol::neg(q));
  const auto vars = fol::free_vars(q);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (!binders.count(*it)) out = fol::forall(*it, out);
  }
  return out;
}

// Returns the rewritten node, or nullopt when the pattern does not match.
std::optional<Formula> rewrite_local(const RewriteRule& rule, const Formula& n,
                                     const std::set<std::string>& binders,
                                     const std::optional<Formula>& witness) {
  using namespace fol;
  const bool fwd = rule.direction == Direction::Forward;
  switch (rule.id) {
    case RuleId::Contraposition:
      if (fwd && is(n, NodeKind::Implies)) return implies(neg(n.rhs()), neg(n.lhs()));
      if (!fwd && is(n, NodeKind::Implies) && is(n.lhs(), NodeKind::Not) &&
          is(n.rhs(), NodeKind::Not)) {
        return implies(n.rhs().operand(), n.lhs().operand());
      }
      return std::nullopt;
    case RuleId::DoubleNegation:
      if (fwd) {
        if (is(n, NodeKind::Not) && is(n.operand(), NodeKind::Not)) {
          return n.operand().operand();
        }
        return std::nullopt;
      }
      return neg(neg(n));
    case RuleId::DeMorganAnd:
      if (fwd && is_not_of(n, NodeKind::And)) {
        return disj(neg(n.operand().lhs()), neg(n.operand().rhs()));
      }
      if (!fwd && is(n, NodeKind::Or) && is(n.lhs(), NodeKind::Not) &&
          is(n.rhs(), NodeKind::Not)) {
        return neg(conj(n.lhs().operand(), n.rhs().operand()));
      }
      return std::nullopt;
    case RuleId::DeMorganOr:
      if (fwd && is(n, NodeKind::Or)) return neg(conj(neg(n.lhs()), neg(n.rhs())));
      if (!fwd && is_not_of(n, NodeKind::And) && is(n.operand().lhs(), NodeKind::Not) &&
          is(n.operand().rhs(), NodeKind::Not)) {
        return disj(n.operand().lhs().operand(), n.operand().rhs().operand());
      }
      return std::nullopt;
    case RuleId::ImplToDisj:
      if (fwd && is(n, NodeKind::Implies)) return disj(neg(n.lhs()), n.rhs());
      if (!fwd && is(n, NodeKind::Or) && is(n.lhs(), NodeKind::Not)) {
        return implies(n.lhs().operand(), n.rhs());
      }
      return std::nullopt;
    case RuleId::QuantifierDuality:
      if (fwd && is(n, NodeKind::ForAll)) return neg(exists(n.name(), neg(n.body())));
      if (fwd && is(n, NodeKind::Exists)) return neg(forall(n.name(), neg(n.body())));
      if (!fwd && is(n, NodeKind::Not) && is_quantifier(n.operand().kind()) &&
          is(n.operand().body(), NodeKind::Not)) {
        const Formula& q = n.operand();
        return is(q, NodeKind::Exists) ? forall(q.name(), q.body().operand())
                                       : exists(q.name(), q.body().operand());
      }
      return std::nullopt;
    case RuleId::BiconditionalExpand:
      if (fwd && is(n, NodeKind::Iff)) {
        return conj(implies(n.lhs(), n.rhs()), implies(n.rhs(), n.lhs()));
      }
      if (!fwd && is(n, NodeKind::And) && is(n.lhs(), NodeKind::Implies) &&
          is(n.rhs(), NodeKind::Implies) && n.lhs().lhs() == n.rhs().rhs() &&
          n.lhs().rhs() == n.rhs().lhs()) {
        return iff(n.lhs().lhs(), n.lhs().rhs());
      }
      return std::nullopt;
    case RuleId::Distribute:
      if (fwd && is(n, NodeKind::And) && is(n.rhs(), NodeKind::Or)) {
        return disj(conj(n.lhs(), n.rhs().lhs()), conj(n.lhs(), n.rhs().rhs()));
      }
      return std::nullopt;
    case RuleId::Absorb:
      if (fwd && is(n, NodeKind::Or) && is(n.rhs(), NodeKind::And) &&
          n.rhs().lhs() == n.lhs()) {
        return n.lhs();
      }
      return std::nullopt;
    case RuleId::ImplAsConj:
      if (fwd && is(n, NodeKind::Implies)) return neg(conj(n.lhs(), neg(n.rhs())));
      if (!fwd && is_not_of(n, NodeKind::And) && is(n.operand().rhs(), NodeKind::Not)) {
        return implies(n.operand().lhs(), n.operand().rhs().operand());
      }
      return std::nullopt;
    case RuleId::NnfNegatedImpl:
      if (fwd && is_not_of(n, NodeKind::Implies)) {
        return conj(n.operand().lhs(), neg(n.operand().rhs()));
      }
      if (!fwd && is(n, NodeKind::And) && is(n.rhs(), NodeKind::Not)) {
        return neg(implies(n.lhs(), n.rhs().operand()));
      }
      return std::nullopt;
    case RuleId::QuantifierCommute:
      if (fwd && is_quantifier(n.kind()) && n.body().kind() == n.kind() &&
          n.name() != n.body().name()) {
        const Formula& inner = n.body();
        if (is(n, NodeKind::ForAll)) {
          return forall(inner.name(), forall(n.name(), inner.body()));
        }
        return exists(inner.name(), exists(n.name(), inner.body()));
      }
      return std::nullopt;
    case RuleId::TautologyInject:
      if (fwd) {
        const Formula q = witness ? *witness : first_atom_or_top(n);
        try {
          return conj(n, excluded_middle(q, binders));
        } catch (const RuleNotApplicable&) {
          return std::nullopt;
        }
      }
      if (is(n, NodeKind::And) && is_excluded_middle(n.rhs())) return n.lhs();
      return std::nullopt;
  }
  return std::nullopt;
}

void enumerate_rec(const Formula& n, Path& path, std::set<std::string>& binders,
                   const std::vector<RewriteRule>& catalog, std::vector<Site>& out) {
  for (const auto& rule : catalog) {
    if (rule.direction == Direction::Backward && !has_backward(rule.id)) continue;
    if (rewrite_local(rule, n, binders, std::nullopt)) out.push_back({rule, path});
  }
  const bool binds = is_quantifier(n.kind());
  const bool fresh = binds && binders.insert(n.name()).second;
  for (std::size_t i = 0; i < n.child_count(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    enumerate_rec(n.child(i), path, binders, catalog, out);
    path.pop_back();
  }
  if (fresh) binders.erase(n.name());
}

}  // namespace

std::string_view rule_name(RuleId id) { return kNames.at(static_cast<std::size_t>(id)); }

RuleId parse_rule_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<RuleId>(i);
  }
  throw InvalidArgument("unknown rewrite rule '" + std::string(name) + "'");
}

std::string_view direction_name(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

Direction parse_direction(std::string_view name) {
  if (name == "forward") return Direction::Forward;
  if (name == "backward") return Direction::Backward;
  throw InvalidArgument("unknown rewrite direction '" + std::string(name) + "'");
}

bool has_backward(RuleId id) {
  return id != RuleId::Distribute && id != RuleId::Absorb &&
         id != RuleId::QuantifierCommute;
}

const std::vector<RewriteRule>& full_catalog() {
  static const std::vector<RewriteRule> catalog = [] {
    std::vector<RewriteRule> out;
    for (std::size_t i = 0; i < kRuleCount; ++i) {
      const auto id = static_cast<RuleId>(i);
      out.push_back({id, Direction::Forward});
      if (has_backward(id)) out.push_back({id, Direction::Backward});
    }
    return out;
  }();
  return catalog;
}

bool applicable(const RewriteRule& rule, const Formula& f, const Path& position) {
  if (rule.direction == Direction::Backward && !has_backward(rule.id)) return false;
  const Formula& n = fol::subformula_at(f, position);
  return rewrite_local(rule, n, fol::binders_along(f, position), std::nullopt)
      .has_value();
}

Formula apply_rewrite(const RewriteRule& rule, const Formula& f, const Path& position,
                      const std::optional<Formula>& witness) {
  if (rule.direction == Direction::Backward && !has_backward(rule.id)) {
    throw RuleNotApplicable(std::string(rule_name(rule.id)) +
                            " has no backward direction");
  }
  if (witness && witness->kind() != NodeKind::Predicate &&
      witness->kind() != NodeKind::Top && witness->kind() != NodeKind::Bottom) {
    throw InvalidArgument("tautology witness must be atomic");
  }
  const Formula& n = fol::subformula_at(f, position);
  auto rewritten = rewrite_local(rule, n, fol::binders_along(f, position), witness);
  if (!rewritten) {
    throw RuleNotApplicable(std::string(rule_name(rule.id)) + " (" +
                            std::string(direction_name(rule.direction)) +
                            ") does not match at the given position");
  }
  return fol::replace_at(f, position, *rewritten);
}

std::vector<Site> enumerate_applicable(const Formula& f,
                                       const std::vector<RewriteRule>& catalog) {
  std::vector<Site> out;
  Path path;
  std::set<std::string> binders;
  enumerate_rec(f, path, binders, catalog, out);
  return out;
}

Formula replay(const Formula& base, const RewriteTrace& trace) {
  Formula cur = base;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (!(fol::subformula_at(cur, step.position) == step.before)) {
      throw RuleNotApplicable("trace step " + std::to_string(i) +
                              ": recorded fragment does not match");
    }
    cur = apply_rewrite(step.rule, cur, step.position, step.witness);
    if (!(fol::subformula_at(cur, step.position) == step.after)) {
      throw RuleNotApplicable("trace step " + std::to_string(i) +
                              ": rewrite result differs from recorded fragment");
    }
  }
  return cur;
}

}  // namespace logobf::obf
