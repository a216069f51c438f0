#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/kinship/puzzle.hpp"
#include "logobf/kinship/resolver.hpp"

namespace logobf::kin {

enum class Level { L1, L2 };

std::string_view level_name(Level l);  // "l1" / "l2"
Level parse_level(std::string_view s);

struct SubstitutionEntry {
  Level level = Level::L1;
  std::string word;          // as printed in the table, e.g. "Maternal Uncle"
  std::string substitution;  // possessive chain replacing the word
  std::vector<Assumption> assumptions;
  /// The entry does not preserve the relation even under its assumptions;
  /// it is kept verbatim and reported when used.
  bool flagged = false;
  std::string note;
};

class TableError : public Error {
 public:
  using Error::Error;
};

class SubstitutionTable {
 public:
  /// Parses the JSON table format shipped in data/kinship_substitutions.json.
  static SubstitutionTable from_json(std::string_view json);
  /// The table compiled into the library.
  static const SubstitutionTable& builtin();

  const std::vector<SubstitutionEntry>& entries() const { return entries_; }
  /// Entries of `level` whose word has canonical key `key`, in table order.
  std::vector<const SubstitutionEntry*> lookup(Level level, std::string_view key) const;

 private:
  std::vector<SubstitutionEntry> entries_;
};

class NoSubstitutableWord : public Error {
 public:
  using Error::Error;
};

struct SubstitutionProvenance {
  std::string word;          // text replaced, as it appeared
  std::string substitution;  // text inserted
  std::size_t offset = 0;    // byte offset of the edit in both texts
  std::size_t original_length = 0;
  Level level = Level::L1;
  std::size_t statement = 0;   // index into the obfuscated puzzle's statements
  std::size_t first_step = 0;  // chain steps covered by the insertion
  std::size_t step_count = 0;
  std::vector<Assumption> assumptions;
  bool flagged = false;

  ScopedAssumptions scope() const { return {statement, first_step, step_count, assumptions}; }
};

struct SubstitutedPuzzle {
  std::string text;
  SubstitutionProvenance provenance;
};

/// Replaces exactly one relation word of `puzzle` with one of its table
/// alternatives. The site and the alternative are drawn from `seed`; words
/// carrying "only" are not replaced. The inserted text keeps the case of the
/// original word's first letter.
SubstitutedPuzzle substitute_once(const Puzzle& puzzle, Level level, std::uint64_t seed,
                                  const SubstitutionTable& table = SubstitutionTable::builtin());

struct KinshipVerdict {
  enum class Kind { Equivalent, Divergent, Ambiguous };
  Kind kind = Kind::Equivalent;
  std::string reason;
  std::optional<CanonicalRelation> base;
  std::optional<CanonicalRelation> obfuscated;
};

std::string_view verdict_name(KinshipVerdict::Kind k);  // "equivalent" ...

/// Resolves both puzzles; Equivalent when the obfuscated answer is an
/// instance of the base answer. `assumptions` apply to the obfuscated puzzle.
KinshipVerdict verify_kinship(const Puzzle& base, const Puzzle& obfuscated,
                              const std::vector<ScopedAssumptions>& assumptions = {},
                              const ResolveOptions& opts = {});

namespace detail {
std::string_view embedded_table_json();
}

}  // namespace logobf::kin
