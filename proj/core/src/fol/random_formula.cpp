#include "logobf/fol/random_formula.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace logobf::fol {

namespace {

struct Sig {
  std::string name;
  std::size_t arity;
};

class Generator {
 public:
  Generator(SeededRng& rng, const RandomFormulaOptions& opts) : rng_(rng), opts_(opts) {
    if (opts.max_predicates == 0 || opts.max_variables == 0) {
      throw InvalidArgument("random_formula: need at least one predicate and variable");
    }
    static const char* kNames[] = {"P", "Q", "R", "S", "T", "U", "V", "W"};
    const std::size_t n = 1 + rng_.index(std::min<std::size_t>(opts.max_predicates, 8));
    std::size_t binaries = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t arity = 1;
      if (binaries < opts.max_binary_predicates && rng_.coin()) {
        arity = 2;
        ++binaries;
      }
      sig_.push_back({kNames[i], arity});
    }
    for (std::size_t i = 0; i < opts.max_variables; ++i) {
      vars_.push_back(std::string(1, static_cast<char>('x' + i % 3)) +
                      (i >= 3 ? std::to_string(i / 3) : std::string()));
    }
    use_constant_ = opts.allow_constant && rng_.index(3) == 0;
  }

  Formula root() {
    std::vector<std::string> bound;
    if (!use_constant_ || rng_.coin()) {
      // Quantifier at the root keeps the formula closed without constants.
      if (opts_.max_depth == 0) throw InvalidArgument("random_formula: depth 0");
      return quantifier(opts_.max_depth, bound);
    }
    return node(opts_.max_depth, bound);
  }

 private:
  Formula quantifier(std::size_t depth, std::vector<std::string>& bound) {
    const std::string var = vars_[rng_.index(vars_.size())];
    const bool universal = rng_.coin();
    bound.push_back(var);
    Formula body = node(depth - 1, bound);
    bound.pop_back();
    return universal ? forall(var, body) : exists(var, body);
  }

  Formula atom(const std::vector<std::string>& bound) {
    const Sig& s = sig_[rng_.index(sig_.size())];
    std::vector<Term> args;
    const std::size_t choices = bound.size() + (use_constant_ ? 1 : 0);
    for (std::size_t i = 0; i < s.arity; ++i) {
      const std::size_t k = rng_.index(choices);
      args.push_back(k < bound.size() ? Term::variable(bound[k]) : Term::constant("c"));
    }
    return pred(s.name, std::move(args));
  }

  Formula node(std::size_t depth, std::vector<std::string>& bound) {
    if (depth == 0) return atom(bound);
    switch (rng_.index(10)) {
      case 0:
      case 1: return atom(bound);
      case 2:
      case 3: return neg(node(depth - 1, bound));
      case 4: return conj(node(depth - 1, bound), node(depth - 1, bound));
      case 5: return disj(node(depth - 1, bound), node(depth - 1, bound));
      case 6: return implies(node(depth - 1, bound), node(depth - 1, bound));
      case 7: return iff(node(depth - 1, bound), node(depth - 1, bound));
      default: return quantifier(depth, bound);
    }
  }

  SeededRng& rng_;
  const RandomFormulaOptions& opts_;
  std::vector<Sig> sig_;
  std::vector<std::string> vars_;
  bool use_constant_ = false;
};

Formula prop(SeededRng& rng, std::size_t atoms, std::size_t depth) {
  auto leaf = [&] { return pred("P" + std::to_string(rng.index(atoms))); };
  if (depth == 0) return leaf();
  switch (rng.index(7)) {
    case 0:
    case 1: return leaf();
    case 2: return neg(prop(rng, atoms, depth - 1));
    case 3: return conj(prop(rng, atoms, depth - 1), prop(rng, atoms, depth - 1));
    case 4: return disj(prop(rng, atoms, depth - 1), prop(rng, atoms, depth - 1));
    case 5: return implies(prop(rng, atoms, depth - 1), prop(rng, atoms, depth - 1));
    default: return iff(prop(rng, atoms, depth - 1), prop(rng, atoms, depth - 1));
  }
}

}  // namespace

Formula random_formula(SeededRng& rng, const RandomFormulaOptions& opts) {
  Generator g(rng, opts);
  return g.root();
}

Formula random_propositional(SeededRng& rng, std::size_t atoms, std::size_t max_depth) {
  if (atoms == 0) throw InvalidArgument("random_propositional: need atoms");
  return prop(rng, atoms, max_depth);
}

}  // namespace logobf::fol
