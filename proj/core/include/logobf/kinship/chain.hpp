#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/kinship/vocabulary.hpp"

namespace logobf::kin {

struct ChainStep {
  std::string key;   // canonical vocabulary key
  std::string text;  // spelling as written
  bool only = false;
  /// Byte span of the relation word (without "only") in the source text.
  std::size_t offset = 0;
  std::size_t length = 0;

  const RelationWord& word() const;
};

struct Anchor {
  enum class Kind { None, Speaker, Named };
  Kind kind = Kind::None;
  std::string name;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Steps are in application order: steps[0] is applied to the anchor first.
/// "sister-in-law's husband of B" yields [sister-in-law, husband] at B, and
/// "son of only son of my grandfather" yields [grandfather, son{only}, son]
/// at the speaker.
struct RelationChain {
  std::vector<ChainStep> steps;
  Anchor anchor;
};

class UnknownRelationWord : public Error {
 public:
  UnknownRelationWord(std::string word, std::size_t offset);
  const std::string& word() const { return word_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string word_;
  std::size_t offset_;
};

class MalformedPossessive : public Error {
 public:
  explicit MalformedPossessive(std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses possessive ("A's B") and prepositional ("B of A") compositions of
/// vocabulary words. A final "of <Name>" sets a named anchor; a leading "my"
/// on the innermost part anchors at the speaker. Offsets are reported
/// relative to `text` plus `base_offset`.
RelationChain parse_chain(std::string_view text, std::size_t base_offset = 0);

}  // namespace logobf::kin
