#include "logobf/kinship/chain.hpp"

#include <algorithm>
#include <cctype>

namespace logobf::kin {

const RelationWord& ChainStep::word() const {
  const RelationWord* w = find_word(key);
  if (!w) throw UnknownRelationWord(text, offset);
  return *w;
}

UnknownRelationWord::UnknownRelationWord(std::string word, std::size_t offset)
    : Error("unknown relation word '" + word + "' at byte " + std::to_string(offset)),
      word_(std::move(word)),
      offset_(offset) {}

MalformedPossessive::MalformedPossessive(std::size_t offset)
    : Error("malformed possessive at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Piece trim(Piece p) {
  while (!p.text.empty() && is_space(p.text.front())) {
    p.text.remove_prefix(1);
    ++p.offset;
  }
  while (!p.text.empty() && is_space(p.text.back())) p.text.remove_suffix(1);
  return p;
}

bool starts_with_word(std::string_view s, std::string_view w) {
  if (s.size() <= w.size() || !is_space(s[w.size()])) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != w[i]) return false;
  }
  return true;
}

Piece drop_word(Piece p, std::size_t n) {
  p.text.remove_prefix(n);
  p.offset += n;
  return trim(p);
}

std::vector<Piece> split(Piece p, const std::vector<std::string_view>& seps) {
  std::vector<Piece> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < p.text.size()) {
    bool hit = false;
    for (auto sep : seps) {
      if (p.text.substr(i, sep.size()) == sep) {
        out.push_back({p.text.substr(start, i - start), p.offset + start});
        i += sep.size();
        start = i;
        hit = true;
        break;
      }
    }
    if (!hit) ++i;
  }
  out.push_back({p.text.substr(start), p.offset + start});
  return out;
}

bool looks_like_name(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RelationChain parse_chain(std::string_view text, std::size_t base_offset) {
  RelationChain chain;
  auto parts = split({text, base_offset}, {" of "});
  for (auto& p : parts) p = trim(p);

  if (parts.size() > 1 && looks_like_name(parts.back().text) &&
      !find_word(parts.back().text)) {
    chain.anchor = {Anchor::Kind::Named, std::string(parts.back().text)};
    parts.pop_back();
  }
  if (starts_with_word(parts.back().text, "my")) {
    chain.anchor.kind = Anchor::Kind::Speaker;
    parts.back() = drop_word(parts.back(), 2);
  }

  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    Piece part = *it;
    if (starts_with_word(part.text, "the")) part = drop_word(part, 3);
    auto segments = split(part, {"'s", "\xE2\x80\x99s"});
    for (auto seg : segments) {
      seg = trim(seg);
      ChainStep step;
      if (starts_with_word(seg.text, "only")) {
        step.only = true;
        seg = drop_word(seg, 4);
      }
      if (seg.text.empty()) throw MalformedPossessive(seg.offset);
      const RelationWord* w = find_word(seg.text);
      if (!w) throw UnknownRelationWord(std::string(seg.text), seg.offset);
      step.key = w->key;
      step.text = std::string(seg.text);
      step.offset = seg.offset;
      step.length = seg.text.size();
      chain.steps.push_back(std::move(step));
    }
  }
  return chain;
}

}  // namespace logobf::kin
