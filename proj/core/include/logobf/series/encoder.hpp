#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "logobf/common/error.hpp"

namespace logobf::series {

/// A number series with at most one hidden slot ("?"), stored as nullopt.
struct SeriesInstance {
  std::vector<std::optional<std::int64_t>> terms;
  std::int64_t answer = 0;
  std::string note;

  friend bool operator==(const SeriesInstance&, const SeriesInstance&) = default;
};

/// Parses "2, 4, 6, 8, ?" (commas and/or whitespace as separators).
std::vector<std::optional<std::int64_t>> parse_terms(std::string_view text);

enum class EncoderType { PlanetName = 1, CodepointSum = 2, Md5 = 3 };

EncoderType encoder_from_number(int n);  // 1, 2 or 3
std::string_view encoder_name(EncoderType t);  // "planet", "codepoint-sum", "md5"

class NegativeTerm : public Error {
 public:
  explicit NegativeTerm(std::int64_t value);
};

class UnrecognizedToken : public Error {
 public:
  explicit UnrecognizedToken(std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class DigestNotInTable : public Error {
 public:
  explicit DigestNotInTable(std::string digest);
};

/// Digit 0-9 to planet name: Sun, Mercury, Venus, Earth, Mars, Jupiter,
/// Saturn, Uranus, Neptune, Pluto.
std::string_view planet_token(int digit);
std::optional<int> planet_digit(std::string_view token);

/// Sum of the Unicode code points of a UTF-8 string.
std::int64_t codepoint_sum(std::string_view utf8);

/// One series term through an encoder. Hidden terms map "?" to "?".
struct MappingEntry {
  std::optional<std::int64_t> original;
  std::vector<std::string> intermediate;  // planet tokens (types 1 and 2)
  std::string surface;
  EncoderType encoder = EncoderType::PlanetName;

  friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

struct MappingLog {
  std::vector<MappingEntry> entries;

  friend bool operator==(const MappingLog&, const MappingLog&) = default;
};

struct EncodedSeries {
  EncoderType encoder = EncoderType::PlanetName;
  std::vector<std::string> terms;  // surface form of each term
  std::int64_t answer = 0;         // never encoded
  MappingLog log;

  /// Terms joined with ", ".
  std::string text() const;
};

/// Digit-wise planet tokens, e.g. 516 -> "Jupiter Mercury Saturn".
EncodedSeries encode_type1(const SeriesInstance& s);
/// Code-point sum of each planet token, e.g. 4 -> "403".
EncodedSeries encode_type2(const SeriesInstance& s);
/// MD5 hex digest of the full decimal representation.
EncodedSeries encode_type3(const SeriesInstance& s);
EncodedSeries encode(const SeriesInstance& s, EncoderType t);

/// Inverts an encoding with its mapping log; every surface term must agree
/// with the log entry at the same position.
SeriesInstance decode(const EncodedSeries& e);

/// Precomputed MD5 digests of the decimal strings 0..max_term.
class DigestTable {
 public:
  explicit DigestTable(std::int64_t max_term);
  std::optional<std::int64_t> find(std::string_view digest) const;

 private:
  std::unordered_map<std::string, std::int64_t> table_;
};

/// Inverts surface terms without a log. Type 3 needs `digests`.
std::vector<std::optional<std::int64_t>> decode_terms(const std::vector<std::string>& surface,
                                                      EncoderType t,
                                                      const DigestTable* digests = nullptr);

}  // namespace logobf::series
