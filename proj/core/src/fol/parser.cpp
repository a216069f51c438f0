#include "logobf/fol/parser.hpp"

#include <algorithm>
#include <cctype>

namespace logobf::fol {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Top,
  Bottom,
  Forall,
  Exists,
  End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Top: return "'$T'";
    case Tok::Bottom: return "'$F'";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = Tok::Ident;
      if (word == "forall") k = Tok::Forall;
      if (word == "exists") k = Tok::Exists;
      out.push_back({k, start, std::move(word)});
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, start, std::string(1, c)});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '.': single(Tok::Dot); continue;
      case '~': single(Tok::Not); continue;
      case '&': single(Tok::And); continue;
      case '|': single(Tok::Or); continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, start, "->"});
      i += 2;
    } else if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, start, "<->"});
      i += 3;
    } else if (s.substr(i, 2) == "$T") {
      out.push_back({Tok::Top, start, "$T"});
      i += 2;
    } else if (s.substr(i, 2) == "$F") {
      out.push_back({Tok::Bottom, start, "$F"});
      i += 2;
    } else {
      throw SyntaxError(start,
                        {"identifier", "'('", "'~'", "'forall'", "'exists'", "'$T'",
                         "'$F'"},
                        std::string(1, c));
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = iff_level();
    expect(Tok::End, {"'<->'", "'->'", "'|'", "'&'"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().offset, std::move(expected),
                      peek().kind == Tok::End ? "end of input" : peek().text);
  }

  // `also` lists operators that could have continued the expression here.
  const Token& expect(Tok k, std::vector<std::string> also = {}) {
    if (peek().kind != k) {
      also.insert(also.begin(), describe(k));
      fail(std::move(also));
    }
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula iff_level() {
    Formula f = impl_level();
    while (accept(Tok::Iff)) f = iff(f, impl_level());
    return f;
  }

  Formula impl_level() {
    Formula f = or_level();
    if (accept(Tok::Implies)) return implies(f, impl_level());
    return f;
  }

  Formula or_level() {
    Formula f = and_level();
    while (accept(Tok::Or)) f = disj(f, and_level());
    return f;
  }

  Formula and_level() {
    Formula f = unary();
    while (accept(Tok::And)) f = conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return neg(unary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      const bool universal = peek().kind == Tok::Forall;
      ++pos_;
      std::string var = expect(Tok::Ident).text;
      expect(Tok::Dot);
      bound_.push_back(var);
      Formula body = iff_level();
      bound_.pop_back();
      return universal ? forall(var, body) : exists(var, body);
    }
    return primary();
  }

  Formula primary() {
    if (accept(Tok::LParen)) {
      Formula f = iff_level();
      expect(Tok::RParen, {"'<->'", "'->'", "'|'", "'&'"});
      return f;
    }
    if (accept(Tok::Top)) return top();
    if (accept(Tok::Bottom)) return bottom();
    if (peek().kind != Tok::Ident) {
      fail({"identifier", "'('", "'~'", "'forall'", "'exists'", "'$T'", "'$F'"});
    }
    std::string name = toks_[pos_++].text;
    expect(Tok::LParen);
    std::vector<Term> args;
    if (!accept(Tok::RParen)) {
      do {
        args.push_back(term(expect(Tok::Ident).text));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, {"','"});
    }
    return pred(std::move(name), std::move(args));
  }

  Term term(const std::string& name) const {
    const bool is_bound = std::find(bound_.begin(), bound_.end(), name) != bound_.end();
    if (is_bound || is_free_variable_name(name)) return Term::variable(name);
    return Term::constant(name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         std::string found)
    : Error("syntax error at byte " + std::to_string(offset) + ": expected " +
            join(expected) + ", found " + (found.empty() ? "nothing" : found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Formula parse_formula(std::string_view text) {
  Formula f = Parser(lex(text)).parse();
  (void)predicate_signature(f);
  return f;
}

}  // namespace logobf::fol
