#include "logobf/spatial/obfuscate.hpp"

#include <array>

#include "logobf/common/rng.hpp"

namespace logobf::spatial {

namespace {

constexpr std::array<std::string_view, 6> kRemarks = {
    "A dog barks at a passing cyclist; no walking during the stop.",
    "A vendor offers roasted corn, which is politely declined; no walking during the stop.",
    "It starts to drizzle and an umbrella comes out; no walking during the stop.",
    "A friend calls and the conversation lasts a few minutes; no walking during the stop.",
    "A street musician finishes a song; no walking during the stop.",
    "The shoelaces need retying; no walking during the stop.",
};

std::string magnitude_text(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

}  // namespace

MovementPath insert_detours(const MovementPath& p, int pairs, std::uint64_t seed,
                            MagnitudeRange range) {
  if (pairs < 1) throw InvalidArgument("detour pair count must be positive");
  if (range.lo < 1 || range.hi < range.lo) {
    throw InvalidMagnitudeRange("detour magnitudes need 1 <= lo <= hi");
  }
  SeededRng rng(seed);
  MovementPath out = p;
  auto& moves = out.moves;
  static constexpr Direction kDirs[] = {Direction::N, Direction::S, Direction::E, Direction::W};
  for (int k = 0; k < pairs; ++k) {
    const Direction d = kDirs[rng.index(4)];
    const Rational mag(rng.between(range.lo, range.hi));
    const std::size_t first = rng.index(moves.size() + 1);
    moves.insert(moves.begin() + static_cast<std::ptrdiff_t>(first), Move{d, mag, true, {}});
    const std::size_t second = first + 1 + rng.index(moves.size() - first);
    moves.insert(moves.begin() + static_cast<std::ptrdiff_t>(second),
                 Move{inverse(d), mag, true, {}});
  }
  return out;
}

MovementPath insert_distractors(const MovementPath& p, int count, std::uint64_t seed) {
  if (count < 0) throw InvalidArgument("distractor count must be non-negative");
  MovementPath out = p;
  if (out.moves.empty() || count == 0) return out;
  SeededRng rng(seed);
  for (int k = 0; k < count; ++k) {
    Move& m = out.moves[rng.index(out.moves.size())];
    const std::string_view r = kRemarks[rng.index(kRemarks.size())];
    if (!m.remark.empty()) m.remark += ' ';
    m.remark += r;
  }
  return out;
}

std::string_view clock_face(Direction d) {
  switch (d) {
    case Direction::N: return "12 o'clock";
    case Direction::E: return "3 o'clock";
    case Direction::S: return "6 o'clock";
    case Direction::W: return "9 o'clock";
  }
  return "?";
}

std::string_view quarter_turn_phrase(Turn t) {
  switch (t) {
    case Turn::Straight: return "keep the same heading";
    case Turn::Right: return "rotate 1 quarter-turn clockwise";
    case Turn::Left: return "rotate 1 quarter-turn counterclockwise";
    case Turn::Back: return "rotate 2 quarter-turns";
  }
  return "?";
}

namespace {

std::string_view plain_turn(Turn t) {
  switch (t) {
    case Turn::Straight: return "keep going straight";
    case Turn::Right: return "turn right";
    case Turn::Left: return "turn left";
    case Turn::Back: return "turn back";
  }
  return "?";
}

std::string heading_text(Direction d, const SurfaceRules& rules) {
  if (rules.clock_face) return "facing " + std::string(clock_face(d));
  return "facing " + std::string(direction_word(d));
}

}  // namespace

std::string substitute_surface(const MovementPath& p, const SurfaceRules& rules) {
  std::string out;
  auto sentence = [&](std::string s) {
    if (!out.empty()) out += ' ';
    out += capitalize(std::move(s));
  };
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    const Move& m = p.moves[i];
    const std::string walk = "walk " + magnitude_text(m.magnitude) + " " + p.unit + ".";
    if (i == 0) {
      sentence(heading_text(m.direction, rules) + ", " + walk);
    } else {
      const Turn t = turn_between(p.moves[i - 1].direction, m.direction);
      const std::string turn(rules.quarter_turns ? quarter_turn_phrase(t) : plain_turn(t));
      sentence(turn + " to face " +
               std::string(rules.clock_face ? clock_face(m.direction)
                                            : direction_word(m.direction)) +
               ", then " + walk);
    }
    if (!m.remark.empty()) sentence(m.remark);
  }
  return out;
}

std::string narrate_plain(const MovementPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    const Move& m = p.moves[i];
    if (i) out += ' ';
    out += i == 0 ? "Walk " : "Then walk ";
    out += magnitude_text(m.magnitude) + " " + p.unit + " " +
           std::string(direction_word(m.direction)) + ".";
    if (!m.remark.empty()) out += " " + m.remark;
  }
  return out;
}

InvarianceVerdict verify_invariance(const MovementPath& base, const MovementPath& obf) {
  const Displacement a = net_displacement(base);
  const Displacement b = net_displacement(obf);
  InvarianceVerdict v;
  v.delta = {b.east - a.east, b.north - a.north};
  v.invariant = a == b;
  return v;
}

bool is_subsequence(const MovementPath& base, const MovementPath& obf) {
  std::size_t j = 0;
  for (const auto& m : obf.moves) {
    if (j < base.moves.size() && m.direction == base.moves[j].direction &&
        m.magnitude == base.moves[j].magnitude && !m.detour) {
      ++j;
    }
  }
  return j == base.moves.size();
}

}  // namespace logobf::spatial
