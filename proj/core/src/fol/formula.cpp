#include "logobf/fol/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace logobf::fol {

bool is_binary(NodeKind k) {
  return k == NodeKind::And || k == NodeKind::Or || k == NodeKind::Implies ||
         k == NodeKind::Iff;
}

bool is_quantifier(NodeKind k) {
  return k == NodeKind::ForAll || k == NodeKind::Exists;
}

Formula make_node(NodeKind kind, std::string name, std::vector<Term> args,
                  std::vector<Formula> children) {
  std::size_t size = 1;
  std::size_t depth = 0;
  for (const auto& c : children) {
    size += c.size();
    depth = std::max(depth, c.depth() + 1);
  }
  auto node = std::make_shared<const Formula::Node>(Formula::Node{
      kind, std::move(name), std::move(args), std::move(children), size, depth});
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size || x.name != y.name ||
      x.args != y.args || x.children.size() != y.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

Formula::Formula() {
  static const Formula kTop = make_node(NodeKind::Top, {}, {}, {});
  node_ = kTop.node_;
}

Formula pred(std::string name, std::vector<Term> args) {
  return make_node(NodeKind::Predicate, std::move(name), std::move(args), {});
}
Formula neg(Formula f) { return make_node(NodeKind::Not, {}, {}, {std::move(f)}); }
Formula conj(Formula a, Formula b) {
  return make_node(NodeKind::And, {}, {}, {std::move(a), std::move(b)});
}
Formula disj(Formula a, Formula b) {
  return make_node(NodeKind::Or, {}, {}, {std::move(a), std::move(b)});
}
Formula implies(Formula a, Formula b) {
  return make_node(NodeKind::Implies, {}, {}, {std::move(a), std::move(b)});
}
Formula iff(Formula a, Formula b) {
  return make_node(NodeKind::Iff, {}, {}, {std::move(a), std::move(b)});
}
Formula forall(std::string var, Formula body) {
  return make_node(NodeKind::ForAll, std::move(var), {}, {std::move(body)});
}
Formula exists(std::string var, Formula body) {
  return make_node(NodeKind::Exists, std::move(var), {}, {std::move(body)});
}
Formula bottom() { return make_node(NodeKind::Bottom, {}, {}, {}); }
Formula top() { return make_node(NodeKind::Top, {}, {}, {}); }

Formula with_children(const Formula& like, std::vector<Formula> children) {
  if (children.size() != like.child_count()) {
    throw InvalidArgument("with_children: child count mismatch");
  }
  return make_node(like.kind(), like.name(),
                   std::vector<Term>(like.args().begin(), like.args().end()),
                   std::move(children));
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      for (const auto& t : f.args()) {
        if (t.is_variable() &&
            std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
          out.insert(t.name);
        }
      }
      return;
    case NodeKind::ForAll:
    case NodeKind::Exists:
      bound.push_back(f.name());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < f.child_count(); ++i) {
        collect_free(f.child(i), bound, out);
      }
  }
}

void walk(const Formula& f, const std::function<void(const Formula&)>& fn) {
  fn(f);
  for (std::size_t i = 0; i < f.child_count(); ++i) walk(f.child(i), fn);
}

void add_arity(std::map<std::string, std::size_t>& sig, const std::string& name,
               std::size_t arity) {
  auto [it, inserted] = sig.emplace(name, arity);
  if (!inserted && it->second != arity) throw ArityError(name, it->second, arity);
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::map<std::string, std::size_t> predicate_signature(const Formula& f) {
  std::map<std::string, std::size_t> sig;
  walk(f, [&](const Formula& n) {
    if (n.kind() == NodeKind::Predicate) add_arity(sig, n.name(), n.args().size());
  });
  return sig;
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const Formula& n) {
    for (const auto& t : n.args()) {
      if (!t.is_variable()) out.insert(t.name);
    }
  });
  return out;
}

std::vector<Formula> atoms(const Formula& f) {
  std::vector<Formula> out;
  walk(f, [&](const Formula& n) {
    if (n.kind() != NodeKind::Predicate) return;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  });
  return out;
}

bool is_quantifier_free(const Formula& f) {
  bool found = false;
  walk(f, [&](const Formula& n) { found = found || is_quantifier(n.kind()); });
  return !found;
}

const Formula& subformula_at(const Formula& f, const Path& path) {
  const Formula* cur = &f;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= cur->child_count()) {
      throw InvalidPosition("position leaves the tree at depth " +
                            std::to_string(i));
    }
    cur = &cur->child(path[i]);
  }
  return *cur;
}

namespace {

Formula replace_rec(const Formula& f, const Path& path, std::size_t at,
                    Formula replacement) {
  if (at == path.size()) return replacement;
  if (path[at] >= f.child_count()) {
    throw InvalidPosition("position leaves the tree at depth " + std::to_string(at));
  }
  std::vector<Formula> kids;
  kids.reserve(f.child_count());
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    kids.push_back(i == path[at] ? replace_rec(f.child(i), path, at + 1, replacement)
                                 : f.child(i));
  }
  return with_children(f, std::move(kids));
}

}  // namespace

Formula replace_at(const Formula& f, const Path& path, Formula replacement) {
  return replace_rec(f, path, 0, std::move(replacement));
}

std::set<std::string> binders_along(const Formula& f, const Path& path) {
  std::set<std::string> out;
  const Formula* cur = &f;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (is_quantifier(cur->kind())) out.insert(cur->name());
    if (path[i] >= cur->child_count()) {
      throw InvalidPosition("position leaves the tree at depth " + std::to_string(i));
    }
    cur = &cur->child(path[i]);
  }
  return out;
}

ArityError::ArityError(std::string predicate, std::size_t first, std::size_t second)
    : Error("predicate '" + predicate + "' used with arity " + std::to_string(first) +
            " and " + std::to_string(second)),
      predicate_(std::move(predicate)) {}

bool is_free_variable_name(const std::string& name) {
  return !name.empty() && name[0] >= 'u' && name[0] <= 'z';
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

bool reserved(const std::string& s) { return s == "forall" || s == "exists"; }

void validate_rec(const Formula& f, std::vector<std::string>& bound) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      if (!is_identifier(f.name()) || reserved(f.name())) {
        throw WellFormednessError("bad predicate name '" + f.name() + "'");
      }
      for (const auto& t : f.args()) {
        if (!is_identifier(t.name) || reserved(t.name)) {
          throw WellFormednessError("bad term name '" + t.name + "'");
        }
        const bool is_bound =
            std::find(bound.begin(), bound.end(), t.name) != bound.end();
        if (t.is_variable()) {
          if (!is_bound && !is_free_variable_name(t.name)) {
            throw WellFormednessError("free variable '" + t.name +
                                      "' must start with u..z");
          }
        } else {
          if (is_bound) {
            throw WellFormednessError("constant '" + t.name +
                                      "' is shadowed by a quantifier");
          }
          if (is_free_variable_name(t.name)) {
            throw WellFormednessError("constant '" + t.name +
                                      "' would read back as a variable");
          }
        }
      }
      return;
    case NodeKind::ForAll:
    case NodeKind::Exists:
      if (!is_identifier(f.name()) || reserved(f.name())) {
        throw WellFormednessError("bad bound variable '" + f.name() + "'");
      }
      bound.push_back(f.name());
      validate_rec(f.body(), bound);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < f.child_count(); ++i) validate_rec(f.child(i), bound);
  }
}

}  // namespace

void validate(const Formula& f) {
  std::vector<std::string> bound;
  validate_rec(f, bound);
  (void)predicate_signature(f);
}

std::map<std::string, std::size_t> problem_signature(const Problem& p) {
  std::map<std::string, std::size_t> sig;
  auto merge = [&](const Formula& f) {
    for (const auto& [name, arity] : predicate_signature(f)) add_arity(sig, name, arity);
  };
  for (const auto& f : p.premises) merge(f);
  merge(p.conclusion);
  return sig;
}

void validate(const Problem& p) {
  if (p.premises.empty()) throw WellFormednessError("problem has no premises");
  for (const auto& f : p.premises) validate(f);
  validate(p.conclusion);
  (void)problem_signature(p);
}

}  // namespace logobf::fol
