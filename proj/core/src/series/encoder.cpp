#include "logobf/series/encoder.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "logobf/series/md5.hpp"

namespace logobf::series {

namespace {

constexpr std::array<std::string_view, 10> kPlanets = {
    "Sun", "Mercury", "Venus", "Earth", "Mars", "Jupiter", "Saturn", "Uranus", "Neptune", "Pluto"};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> planet_tokens(std::int64_t v) {
  if (v < 0) throw NegativeTerm(v);
  std::vector<std::string> out;
  for (char d : std::to_string(v)) out.emplace_back(kPlanets[static_cast<std::size_t>(d - '0')]);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::int64_t digits_to_value(const std::vector<int>& digits) {
  std::int64_t v = 0;
  for (int d : digits) v = v * 10 + d;
  return v;
}

// Sum -> digit for the ten planet tokens.
std::optional<int> digit_from_sum(std::int64_t sum) {
  for (int d = 0; d < 10; ++d) {
    if (codepoint_sum(kPlanets[static_cast<std::size_t>(d)]) == sum) return d;
  }
  return std::nullopt;
}

std::optional<std::int64_t> decode_one(const std::string& surface, EncoderType t,
                                       const DigestTable* digests) {
  if (surface == "?") return std::nullopt;
  std::vector<int> digits;
  switch (t) {
    case EncoderType::PlanetName:
      for (const auto& tok : split_ws(surface)) {
        auto d = planet_digit(tok);
        if (!d) throw UnrecognizedToken(tok);
        digits.push_back(*d);
      }
      break;
    case EncoderType::CodepointSum:
      for (const auto& tok : split_ws(surface)) {
        auto n = parse_int(tok);
        auto d = n ? digit_from_sum(*n) : std::nullopt;
        if (!d) throw UnrecognizedToken(tok);
        digits.push_back(*d);
      }
      break;
    case EncoderType::Md5: {
      if (!digests) throw InvalidArgument("MD5 surfaces need a digest table to decode");
      auto v = digests->find(surface);
      if (!v) throw DigestNotInTable(surface);
      return *v;
    }
  }
  if (digits.empty()) throw UnrecognizedToken(surface);
  return digits_to_value(digits);
}

}  // namespace

NegativeTerm::NegativeTerm(std::int64_t value)
    : Error("series term " + std::to_string(value) + " is negative") {}

UnrecognizedToken::UnrecognizedToken(std::string token)
    : Error("unrecognized series token '" + token + "'"), token_(std::move(token)) {}

DigestNotInTable::DigestNotInTable(std::string digest)
    : Error("digest " + digest + " is not in the table") {}

std::vector<std::optional<std::int64_t>> parse_terms(std::string_view text) {
  std::string spaced(text);
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& tok : split_ws(spaced)) {
    if (tok == "?") {
      out.push_back(std::nullopt);
      continue;
    }
    auto v = parse_int(tok);
    if (!v) throw InvalidArgument("series term '" + tok + "' is not an integer");
    out.push_back(*v);
  }
  return out;
}

EncoderType encoder_from_number(int n) {
  if (n < 1 || n > 3) throw InvalidArgument("encoder type must be 1, 2 or 3");
  return static_cast<EncoderType>(n);
}

std::string_view encoder_name(EncoderType t) {
  switch (t) {
    case EncoderType::PlanetName: return "planet";
    case EncoderType::CodepointSum: return "codepoint-sum";
    case EncoderType::Md5: return "md5";
  }
  return "?";
}

std::string_view planet_token(int digit) {
  if (digit < 0 || digit > 9) throw InvalidArgument("digit out of range");
  return kPlanets[static_cast<std::size_t>(digit)];
}

std::optional<int> planet_digit(std::string_view token) {
  for (std::size_t i = 0; i < kPlanets.size(); ++i) {
    if (kPlanets[i] == token) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::int64_t codepoint_sum(std::string_view s) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto b = static_cast<unsigned char>(s[i]);
    std::size_t n = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    std::uint32_t cp = n == 1 ? b : n == 2 ? (b & 0x1Fu) : n == 3 ? (b & 0x0Fu) : (b & 0x07u);
    if (i + n > s.size()) throw InvalidArgument("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < n; ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3Fu);
    }
    sum += cp;
    i += n;
  }
  return sum;
}

std::string EncodedSeries::text() const { return join(terms, ", "); }

EncodedSeries encode(const SeriesInstance& s, EncoderType t) {
  EncodedSeries e;
  e.encoder = t;
  e.answer = s.answer;
  for (const auto& term : s.terms) {
    MappingEntry m;
    m.original = term;
    m.encoder = t;
    if (!term) {
      m.surface = "?";
    } else {
      switch (t) {
        case EncoderType::PlanetName:
          m.intermediate = planet_tokens(*term);
          m.surface = join(m.intermediate, " ");
          break;
        case EncoderType::CodepointSum: {
          m.intermediate = planet_tokens(*term);
          std::vector<std::string> sums;
          for (const auto& p : m.intermediate) sums.push_back(std::to_string(codepoint_sum(p)));
          m.surface = join(sums, " ");
          break;
        }
        case EncoderType::Md5:
          if (*term < 0) throw NegativeTerm(*term);
          m.surface = md5_hex(std::to_string(*term));
          break;
      }
    }
    e.terms.push_back(m.surface);
    e.log.entries.push_back(std::move(m));
  }
  return e;
}

EncodedSeries encode_type1(const SeriesInstance& s) { return encode(s, EncoderType::PlanetName); }
EncodedSeries encode_type2(const SeriesInstance& s) { return encode(s, EncoderType::CodepointSum); }
EncodedSeries encode_type3(const SeriesInstance& s) { return encode(s, EncoderType::Md5); }

SeriesInstance decode(const EncodedSeries& e) {
  if (e.terms.size() != e.log.entries.size()) {
    throw InvalidArgument("mapping log does not cover every surface term");
  }
  SeriesInstance s;
  s.answer = e.answer;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const MappingEntry& m = e.log.entries[i];
    if (m.surface != e.terms[i] || m.encoder != e.encoder) throw UnrecognizedToken(e.terms[i]);
    // Re-derive the forward mapping so a tampered log cannot decode silently.
    if (m.original) {
      SeriesInstance one;
      one.terms = {m.original};
      if (encode(one, e.encoder).terms.front() != m.surface) throw UnrecognizedToken(m.surface);
    } else if (m.surface != "?") {
      throw UnrecognizedToken(m.surface);
    }
    s.terms.push_back(m.original);
  }
  return s;
}

DigestTable::DigestTable(std::int64_t max_term) {
  if (max_term < 0) throw NegativeTerm(max_term);
  table_.reserve(static_cast<std::size_t>(max_term) + 1);
  for (std::int64_t v = 0; v <= max_term; ++v) table_.emplace(md5_hex(std::to_string(v)), v);
}

std::optional<std::int64_t> DigestTable::find(std::string_view digest) const {
  auto it = table_.find(std::string(digest));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::optional<std::int64_t>> decode_terms(const std::vector<std::string>& surface,
                                                      EncoderType t,
                                                      const DigestTable* digests) {
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& s : surface) out.push_back(decode_one(s, t, digests));
  return out;
}

}  // namespace logobf::series
