#include "logobf/kinship/puzzle.hpp"

#include <cctype>
#include <regex>

namespace logobf::kin {

PuzzleSyntaxError::PuzzleSyntaxError(std::string message, std::size_t offset)
    : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

const std::regex& pointing_re() {
  static const std::regex re(
      R"(^\s*Pointing\s+(?:towards|toward|to|at)\s+(?:a|an|the)\s+)"
      R"((boy|girl|man|woman|lady|gentleman|person)\s*,?\s*(\w+)\s+said\s*,?\s*["“]?\s*)"
      R"((?:he|she)\s+is\s+(?:the\s+)?(.+?)\s*["”]?\s*[,.]\s*)"
      R"(How\s+is\s+(?:that|the|this)\s+\w+\s+related\s+to\s+(\w+)\s*\?\s*$)",
      std::regex::icase);
  return re;
}

const std::regex& statement_re() {
  static const std::regex re(R"(^\s*(\w+)\s+is\s+(?:the\s+)?(.+)\s+of\s+(\w+)\s*$)");
  return re;
}

const std::regex& question_re() {
  static const std::regex re(R"(^\s*How\s+is\s+(\w+)\s+related\s+to\s+(\w+)\s*\??\s*$)",
                             std::regex::icase);
  return re;
}

Gender noun_gender(std::string noun) {
  for (auto& c : noun) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (noun == "boy" || noun == "man" || noun == "gentleman") return Gender::Male;
  if (noun == "girl" || noun == "woman" || noun == "lady") return Gender::Female;
  return Gender::Unknown;
}

struct Clause {
  std::string text;
  std::size_t offset;
  bool question_mark;
};

std::vector<Clause> split_clauses(std::string_view s) {
  std::vector<Clause> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end, bool q) {
    out.push_back({std::string(s.substr(start, end - start)), start, q});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == ',' || c == '.' || c == ';' || c == '?') {
      flush(i, c == '?');
      start = i + 1;
    } else if (s.substr(i, 5) == " and ") {
      flush(i, false);
      start = i + 5;
      i += 4;
    }
  }
  flush(s.size(), false);
  return out;
}

bool blank(const std::string& s) {
  for (unsigned char c : s) {
    if (!std::isspace(c)) return false;
  }
  return true;
}

}  // namespace

Puzzle parse_puzzle(std::string_view text) {
  Puzzle p;
  p.text = std::string(text);

  std::smatch m;
  if (std::regex_match(p.text, m, pointing_re())) {
    Statement st;
    st.target = "the " + m.str(1);
    st.target_gender = noun_gender(m.str(1));
    const std::string speaker = m.str(2);
    st.chain = parse_chain(m.str(3), static_cast<std::size_t>(m.position(3)));
    if (st.chain.anchor.kind == Anchor::Kind::Named) {
      st.anchor = st.chain.anchor.name;
    } else if (st.chain.anchor.kind == Anchor::Kind::Speaker) {
      st.anchor = speaker;
    } else {
      throw PuzzleSyntaxError("relation chain has no anchor",
                              static_cast<std::size_t>(m.position(3)));
    }
    p.query_target = st.target;
    p.query_anchor = m.str(4);
    p.statements.push_back(std::move(st));
    return p;
  }

  for (const auto& clause : split_clauses(text)) {
    if (blank(clause.text)) continue;
    if (std::regex_match(clause.text, m, question_re())) {
      p.query_target = m.str(1);
      p.query_anchor = m.str(2);
      continue;
    }
    if (std::regex_match(clause.text, m, statement_re())) {
      Statement st;
      st.target = m.str(1);
      st.anchor = m.str(3);
      st.chain = parse_chain(m.str(2), clause.offset + static_cast<std::size_t>(m.position(2)));
      if (st.chain.anchor.kind != Anchor::Kind::None) {
        throw PuzzleSyntaxError("statement chain carries its own anchor", clause.offset);
      }
      st.chain.anchor = {Anchor::Kind::Named, st.anchor};
      p.statements.push_back(std::move(st));
      continue;
    }
    throw PuzzleSyntaxError("unsupported clause '" + clause.text + "'", clause.offset);
  }
  if (p.statements.empty()) throw PuzzleSyntaxError("puzzle has no relation statement", 0);
  if (p.query_target.empty()) {
    p.query_target = p.statements.back().target;
    p.query_anchor = p.statements.back().anchor;
  }
  return p;
}

}  // namespace logobf::kin
