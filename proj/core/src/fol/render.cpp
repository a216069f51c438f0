#include "logobf/fol/render.hpp"

namespace logobf::fol {

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Iff: return 1;
    case NodeKind::Implies: return 2;
    case NodeKind::Or: return 3;
    case NodeKind::And: return 4;
    default: return 5;
  }
}

std::string args_of(const Formula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out += ",";
    out += f.args()[i].name;
  }
  return out;
}

struct Symbols {
  const char* not_;
  const char* and_;
  const char* or_;
  const char* implies;
  const char* iff;
  const char* top;
  const char* bottom;
};

constexpr Symbols kAscii{"~", " & ", " | ", " -> ", " <-> ", "$T", "$F"};
constexpr Symbols kUnicode{"¬", " ∧ ", " ∨ ", " → ", " ↔ ", "⊤", "⊥"};

const char* binary_symbol(const Symbols& s, NodeKind k) {
  switch (k) {
    case NodeKind::And: return s.and_;
    case NodeKind::Or: return s.or_;
    case NodeKind::Implies: return s.implies;
    default: return s.iff;
  }
}

// Shared by the ascii and unicode styles. Quantifier bodies extend as far
// right as possible, so a quantifier nested under a connective is always
// parenthesized.
void infix(const Formula& f, const Symbols& s, bool unicode, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += "(";
    infix(c, s, unicode, out);
    if (parens) out += ")";
  };
  switch (f.kind()) {
    case NodeKind::Predicate:
      out += f.name();
      out += "(";
      out += args_of(f);
      out += ")";
      return;
    case NodeKind::Top: out += s.top; return;
    case NodeKind::Bottom: out += s.bottom; return;
    case NodeKind::Not: {
      out += s.not_;
      const auto k = f.operand().kind();
      child(f.operand(), is_binary(k) || is_quantifier(k));
      return;
    }
    case NodeKind::ForAll:
    case NodeKind::Exists: {
      if (unicode) {
        out += f.kind() == NodeKind::ForAll ? "∀" : "∃";
        out += f.name();
        out += " ";
      } else {
        out += f.kind() == NodeKind::ForAll ? "forall " : "exists ";
        out += f.name();
        out += ". ";
      }
      child(f.body(), is_binary(f.body().kind()));
      return;
    }
    default: {
      const int p = precedence(f.kind());
      const bool right_assoc = f.kind() == NodeKind::Implies;
      auto needs = [&](const Formula& c, bool is_left) {
        if (is_quantifier(c.kind())) return true;
        if (!is_binary(c.kind())) return false;
        const int q = precedence(c.kind());
        if (q != p) return q < p;
        return right_assoc ? is_left : !is_left;
      };
      child(f.lhs(), needs(f.lhs(), true));
      out += binary_symbol(s, f.kind());
      child(f.rhs(), needs(f.rhs(), false));
      return;
    }
  }
}

bool prover9_atomic(const Formula& f) {
  return f.kind() == NodeKind::Predicate || f.kind() == NodeKind::Top ||
         f.kind() == NodeKind::Bottom;
}

// Fully parenthesized so the output does not depend on Prover9's operator
// precedence table.
void prover9(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      out += f.name();
      if (!f.args().empty()) {
        out += "(";
        out += args_of(f);
        out += ")";
      }
      return;
    case NodeKind::Top: out += "$T"; return;
    case NodeKind::Bottom: out += "$F"; return;
    case NodeKind::Not:
      out += "-";
      if (prover9_atomic(f.operand())) {
        prover9(f.operand(), out);
      } else {
        out += "(";
        prover9(f.operand(), out);
        out += ")";
      }
      return;
    case NodeKind::ForAll:
    case NodeKind::Exists: {
      out += f.kind() == NodeKind::ForAll ? "all " : "exists ";
      out += f.name();
      out += " ";
      const bool bare = prover9_atomic(f.body()) || is_quantifier(f.body().kind());
      if (!bare) out += "(";
      prover9(f.body(), out);
      if (!bare) out += ")";
      return;
    }
    default: {
      auto side = [&](const Formula& c) {
        const bool bare = prover9_atomic(c) || c.kind() == NodeKind::Not;
        if (!bare) out += "(";
        prover9(c, out);
        if (!bare) out += ")";
      };
      side(f.lhs());
      out += binary_symbol(kAscii, f.kind());
      side(f.rhs());
      return;
    }
  }
}

void english(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Predicate:
      out += f.name();
      out += " holds";
      if (!f.args().empty()) {
        out += " of ";
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += f.args()[i].name;
        }
      }
      return;
    case NodeKind::Top: out += "a tautology holds"; return;
    case NodeKind::Bottom: out += "a contradiction arises"; return;
    case NodeKind::Not:
      out += "it is not the case that ";
      english(f.operand(), out);
      return;
    case NodeKind::And:
      out += "both ";
      english(f.lhs(), out);
      out += " and ";
      english(f.rhs(), out);
      return;
    case NodeKind::Or:
      out += "either ";
      english(f.lhs(), out);
      out += " or ";
      english(f.rhs(), out);
      return;
    case NodeKind::Implies:
      out += "if ";
      english(f.lhs(), out);
      out += " then ";
      english(f.rhs(), out);
      return;
    case NodeKind::Iff:
      out += "it holds that ";
      english(f.lhs(), out);
      out += " if and only if ";
      english(f.rhs(), out);
      return;
    case NodeKind::ForAll:
      out += "for every entity ";
      out += f.name();
      out += ", ";
      english(f.body(), out);
      return;
    case NodeKind::Exists:
      out += "there exists an entity ";
      out += f.name();
      out += " such that ";
      english(f.body(), out);
      return;
  }
}

}  // namespace

std::string render_formula(const Formula& f, Style style) {
  std::string out;
  switch (style) {
    case Style::Ascii: infix(f, kAscii, false, out); break;
    case Style::Unicode: infix(f, kUnicode, true, out); break;
    case Style::Prover9:
      prover9(f, out);
      out += ".";
      break;
    case Style::NlTemplate: english(f, out); break;
  }
  return out;
}

Style parse_style(std::string_view name) {
  if (name == "ascii") return Style::Ascii;
  if (name == "unicode") return Style::Unicode;
  if (name == "prover9") return Style::Prover9;
  if (name == "nl-template") return Style::NlTemplate;
  throw InvalidArgument("unknown render style '" + std::string(name) + "'");
}

std::string_view style_name(Style style) {
  switch (style) {
    case Style::Ascii: return "ascii";
    case Style::Unicode: return "unicode";
    case Style::Prover9: return "prover9";
    case Style::NlTemplate: return "nl-template";
  }
  return "ascii";
}

std::string render_prover9_problem(const Problem& p) {
  std::string out = "formulas(assumptions).\n";
  for (const auto& f : p.premises) {
    out += render_formula(f, Style::Prover9);
    out += "\n";
  }
  out += "end_of_list.\n\nformulas(goals).\n";
  out += render_formula(p.conclusion, Style::Prover9);
  out += "\nend_of_list.\n";
  return out;
}

}  // namespace logobf::fol
