#include "logobf/obfuscator/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace logobf::obf {

using fol::Formula;
using fol::NodeKind;

bool Interpretation::holds(const std::string& predicate,
                           const std::vector<std::size_t>& tuple) const {
  auto it = predicates.find(predicate);
  if (it == predicates.end()) {
    throw InvalidArgument("interpretation has no predicate '" + predicate + "'");
  }
  std::size_t idx = 0;
  std::size_t scale = 1;
  for (std::size_t a : tuple) {
    if (a >= domain_size) throw InvalidArgument("element outside the domain");
    idx += a * scale;
    scale *= domain_size;
  }
  if (idx >= it->second.size()) throw InvalidArgument("arity mismatch for " + predicate);
  return it->second[idx];
}

namespace {

bool eval_rec(const Formula& f, const Interpretation& m,
              std::map<std::string, std::size_t>& env) {
  switch (f.kind()) {
    case NodeKind::Top: return true;
    case NodeKind::Bottom: return false;
    case NodeKind::Predicate: {
      std::vector<std::size_t> tuple;
      for (const auto& t : f.args()) {
        auto it = env.find(t.name);
        if (t.is_variable() && it != env.end()) {
          tuple.push_back(it->second);
          continue;
        }
        auto c = m.constants.find(t.name);
        if (c == m.constants.end()) {
          throw InvalidArgument("no value for term '" + t.name + "'");
        }
        tuple.push_back(c->second);
      }
      return m.holds(f.name(), tuple);
    }
    case NodeKind::Not: return !eval_rec(f.operand(), m, env);
    case NodeKind::And: return eval_rec(f.lhs(), m, env) && eval_rec(f.rhs(), m, env);
    case NodeKind::Or: return eval_rec(f.lhs(), m, env) || eval_rec(f.rhs(), m, env);
    case NodeKind::Implies:
      return !eval_rec(f.lhs(), m, env) || eval_rec(f.rhs(), m, env);
    case NodeKind::Iff: return eval_rec(f.lhs(), m, env) == eval_rec(f.rhs(), m, env);
    case NodeKind::ForAll:
    case NodeKind::Exists: {
      const bool universal = f.kind() == NodeKind::ForAll;
      std::optional<std::size_t> saved;
      if (auto it = env.find(f.name()); it != env.end()) saved = it->second;
      bool result = universal;
      for (std::size_t e = 0; e < m.domain_size; ++e) {
        env[f.name()] = e;
        const bool v = eval_rec(f.body(), m, env);
        if (universal && !v) {
          result = false;
          break;
        }
        if (!universal && v) {
          result = true;
          break;
        }
      }
      if (saved) {
        env[f.name()] = *saved;
      } else {
        env.erase(f.name());
      }
      return result;
    }
  }
  return false;
}

// Flattened formula for the bit-sliced evaluator. Each 64-bit word holds the
// truth value of a formula under 64 consecutive interpretations, where
// interpretation number I sets predicate cell c to bit c of I.
struct Arg {
  bool is_slot;       // bound variable slot, else a constant/free-variable index
  std::size_t index;
};

struct CNode {
  NodeKind kind = NodeKind::Top;
  std::size_t a = 0, b = 0;  // children
  std::size_t pred = 0;      // predicate index
  std::size_t slot = 0;      // quantifier slot
  std::vector<Arg> args;
};

struct Compiled {
  std::vector<CNode> nodes;
  std::size_t root = 0;
  std::size_t slots = 0;
};

struct Context {
  std::vector<std::string> preds;
  std::vector<std::size_t> arity;
  std::vector<std::string> consts;  // constants and free variables

  std::size_t pred_index(const std::string& n) const {
    return static_cast<std::size_t>(std::find(preds.begin(), preds.end(), n) - preds.begin());
  }
  std::size_t const_index(const std::string& n) const {
    return static_cast<std::size_t>(std::find(consts.begin(), consts.end(), n) -
                                    consts.begin());
  }
};

std::size_t compile(const Formula& f, const Context& ctx, std::vector<std::string>& scope,
                    Compiled& out) {
  CNode n;
  n.kind = f.kind();
  switch (f.kind()) {
    case NodeKind::Predicate:
      n.pred = ctx.pred_index(f.name());
      for (const auto& t : f.args()) {
        auto it = std::find(scope.rbegin(), scope.rend(), t.name);
        if (t.is_variable() && it != scope.rend()) {
          n.args.push_back({true, static_cast<std::size_t>(scope.rend() - it - 1)});
        } else {
          n.args.push_back({false, ctx.const_index(t.name)});
        }
      }
      break;
    case NodeKind::ForAll:
    case NodeKind::Exists:
      n.slot = scope.size();
      scope.push_back(f.name());
      out.slots = std::max(out.slots, scope.size());
      n.a = compile(f.body(), ctx, scope, out);
      scope.pop_back();
      break;
    case NodeKind::Not: n.a = compile(f.operand(), ctx, scope, out); break;
    case NodeKind::Top:
    case NodeKind::Bottom: break;
    default:
      n.a = compile(f.lhs(), ctx, scope, out);
      n.b = compile(f.rhs(), ctx, scope, out);
  }
  out.nodes.push_back(std::move(n));
  return out.nodes.size() - 1;
}

constexpr std::uint64_t kLowMasks[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

class SlicedEvaluator {
 public:
  SlicedEvaluator(const Compiled& c, std::size_t domain, const std::vector<std::size_t>& offsets)
      : c_(c), domain_(domain), offsets_(offsets), env_(c.slots, 0) {}

  void set_constants(const std::vector<std::size_t>& values) { consts_ = &values; }
  void set_word(std::uint64_t w) { word_ = w; }

  std::uint64_t eval() { return eval(c_.root); }

 private:
  std::uint64_t cell_mask(std::size_t cell) const {
    if (cell < 6) return kLowMasks[cell];
    return ((word_ >> (cell - 6)) & 1U) ? ~std::uint64_t{0} : 0;
  }

  std::uint64_t eval(std::size_t i) {
    const CNode& n = c_.nodes[i];
    switch (n.kind) {
      case NodeKind::Top: return ~std::uint64_t{0};
      case NodeKind::Bottom: return 0;
      case NodeKind::Predicate: {
        std::size_t idx = 0;
        std::size_t scale = 1;
        for (const auto& a : n.args) {
          idx += (a.is_slot ? env_[a.index] : (*consts_)[a.index]) * scale;
          scale *= domain_;
        }
        return cell_mask(offsets_[n.pred] + idx);
      }
      case NodeKind::Not: return ~eval(n.a);
      case NodeKind::And: {
        const std::uint64_t l = eval(n.a);
        return l ? (l & eval(n.b)) : 0;
      }
      case NodeKind::Or: {
        const std::uint64_t l = eval(n.a);
        return ~l ? (l | eval(n.b)) : l;
      }
      case NodeKind::Implies: {
        const std::uint64_t l = eval(n.a);
        return l ? (~l | eval(n.b)) : ~std::uint64_t{0};
      }
      case NodeKind::Iff: return ~(eval(n.a) ^ eval(n.b));
      case NodeKind::ForAll: {
        std::uint64_t acc = ~std::uint64_t{0};
        for (std::size_t e = 0; e < domain_ && acc; ++e) {
          env_[n.slot] = e;
          acc &= eval(n.a);
        }
        return acc;
      }
      case NodeKind::Exists: {
        std::uint64_t acc = 0;
        for (std::size_t e = 0; e < domain_ && ~acc; ++e) {
          env_[n.slot] = e;
          acc |= eval(n.a);
        }
        return acc;
      }
    }
    return 0;
  }

  const Compiled& c_;
  std::size_t domain_;
  const std::vector<std::size_t>& offsets_;
  std::vector<std::size_t> env_;
  const std::vector<std::size_t>* consts_ = nullptr;
  std::uint64_t word_ = 0;
};

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::set<std::string> free_terms(const Formula& f) {
  auto out = fol::constants(f);
  for (const auto& v : fol::free_vars(f)) out.insert(v);
  return out;
}

}  // namespace

bool evaluate(const Formula& f, const Interpretation& m) {
  std::map<std::string, std::size_t> env;
  return eval_rec(f, m, env);
}

BudgetExceeded::BudgetExceeded(std::size_t largest_completed_domain, std::uint64_t needed)
    : Error("interpretation budget exceeded (needed " + std::to_string(needed) +
            "); largest completed domain size " +
            std::to_string(largest_completed_domain)),
      largest_(largest_completed_domain) {}

std::string_view verdict_name(EquivVerdict::Kind k) {
  switch (k) {
    case EquivVerdict::Kind::PropositionallyEquivalent: return "propositionally_equivalent";
    case EquivVerdict::Kind::EquivalentUpTo: return "equivalent_up_to";
    case EquivVerdict::Kind::CounterModel: return "counter_model";
  }
  return "?";
}

EquivVerdict check_equivalence(const Formula& f, const Formula& g, const EquivOptions& opts) {
  if (opts.max_domain == 0) throw InvalidArgument("max_domain must be positive");

  std::map<std::string, std::size_t> sig;
  try {
    sig = fol::predicate_signature(f);
    for (const auto& [name, arity] : fol::predicate_signature(g)) {
      auto [it, inserted] = sig.emplace(name, arity);
      if (!inserted && it->second != arity) {
        throw SignatureMismatch("predicate '" + name + "' has arity " +
                                std::to_string(it->second) + " and " +
                                std::to_string(arity));
      }
    }
  } catch (const fol::ArityError& e) {
    throw SignatureMismatch(e.what());
  }

  Context ctx;
  for (const auto& [name, arity] : sig) {
    ctx.preds.push_back(name);
    ctx.arity.push_back(arity);
  }
  std::set<std::string> terms = free_terms(f);
  for (const auto& t : free_terms(g)) terms.insert(t);
  ctx.consts.assign(terms.begin(), terms.end());
  for (const auto& c : ctx.consts) {
    if (sig.count(c)) throw SignatureMismatch("'" + c + "' used as predicate and term");
  }

  const bool propositional =
      ctx.consts.empty() && fol::is_quantifier_free(f) && fol::is_quantifier_free(g);
  const std::size_t max_domain = propositional ? 1 : opts.max_domain;

  Compiled cf, cg;
  {
    std::vector<std::string> scope;
    cf.root = compile(f, ctx, scope, cf);
    cg.root = compile(g, ctx, scope, cg);
  }

  std::uint64_t visited = 0;
  for (std::size_t d = 1; d <= max_domain; ++d) {
    std::vector<std::size_t> offsets;
    std::size_t bits = 0;
    for (std::size_t a : ctx.arity) {
      offsets.push_back(bits);
      bits += static_cast<std::size_t>(ipow(d, a));
    }
    const std::uint64_t assignments = ipow(d, ctx.consts.size());
    if (bits >= 63 || assignments == 0 ||
        (std::uint64_t{1} << bits) > opts.budget / assignments ||
        visited + (std::uint64_t{1} << bits) * assignments > opts.budget) {
      const std::uint64_t needed =
          bits >= 63 ? ~std::uint64_t{0} : visited + (std::uint64_t{1} << bits) * assignments;
      throw BudgetExceeded(d - 1, needed);
    }
    visited += (std::uint64_t{1} << bits) * assignments;

    const std::uint64_t words = bits >= 6 ? (std::uint64_t{1} << (bits - 6)) : 1;
    const std::uint64_t valid =
        bits >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << bits)) - 1);

    SlicedEvaluator ef(cf, d, offsets);
    SlicedEvaluator eg(cg, d, offsets);
    std::vector<std::size_t> cvals(ctx.consts.size(), 0);
    ef.set_constants(cvals);
    eg.set_constants(cvals);
    for (std::uint64_t a = 0; a < assignments; ++a) {
      for (std::uint64_t w = 0; w < words; ++w) {
        ef.set_word(w);
        eg.set_word(w);
        const std::uint64_t diff = (ef.eval() ^ eg.eval()) & valid;
        if (!diff) continue;

        const std::uint64_t interp = w * 64 + static_cast<std::uint64_t>(std::countr_zero(diff));
        Interpretation m;
        m.domain_size = d;
        for (std::size_t p = 0; p < ctx.preds.size(); ++p) {
          const auto cells = static_cast<std::size_t>(ipow(d, ctx.arity[p]));
          std::vector<bool> table(cells);
          for (std::size_t c = 0; c < cells; ++c) table[c] = (interp >> (offsets[p] + c)) & 1U;
          m.predicates[ctx.preds[p]] = std::move(table);
        }
        for (std::size_t k = 0; k < ctx.consts.size(); ++k) m.constants[ctx.consts[k]] = cvals[k];

        EquivVerdict v;
        v.kind = EquivVerdict::Kind::CounterModel;
        v.f_value = evaluate(f, m);
        v.g_value = evaluate(g, m);
        if (v.f_value == v.g_value) {
          throw Error("internal: counter-model does not separate the formulas");
        }
        v.counter_model = std::move(m);
        return v;
      }
      // Odometer over constant assignments.
      for (std::size_t k = 0; k < cvals.size(); ++k) {
        if (++cvals[k] < d) break;
        cvals[k] = 0;
      }
    }
  }

  EquivVerdict v;
  if (propositional) {
    v.kind = EquivVerdict::Kind::PropositionallyEquivalent;
  } else {
    v.kind = EquivVerdict::Kind::EquivalentUpTo;
    v.max_domain = max_domain;
  }
  return v;
}

}  // namespace logobf::obf
