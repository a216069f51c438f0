#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logobf/spatial/path.hpp"

namespace logobf::spatial {

class InvalidMagnitudeRange : public Error {
 public:
  using Error::Error;
};

/// Inclusive integer range for detour magnitudes.
struct MagnitudeRange {
  std::int64_t lo = 1;
  std::int64_t hi = 9;
};

/// Inserts `pairs` detour pairs (w, w^-1). The forward member goes to a
/// seeded position and its inverse to a later seeded position, so base moves
/// may separate the two. Base moves keep their relative order.
MovementPath insert_detours(const MovementPath& p, int pairs, std::uint64_t seed,
                            MagnitudeRange range = {});

/// Attaches `count` zero-distance narrative remarks to seeded moves.
MovementPath insert_distractors(const MovementPath& p, int count, std::uint64_t seed);

/// Which surface substitutions substitute_surface applies.
struct SurfaceRules {
  bool clock_face = true;     // North -> "facing 12 o'clock", ...
  bool quarter_turns = true;  // turn right -> "rotate 1 quarter-turn clockwise", ...
};

std::string_view clock_face(Direction d);  // "12 o'clock", ...
std::string_view quarter_turn_phrase(Turn t);  // "rotate 1 quarter-turn clockwise", ...

/// Narrates the path one sentence per move, plus remark sentences. Headings
/// after the first move are expressed as turns when quarter_turns is set.
std::string substitute_surface(const MovementPath& p, const SurfaceRules& rules = {});

/// Plain narration without substitutions: "Walk 5 km north. Then walk 3 km east."
std::string narrate_plain(const MovementPath& p);

struct InvarianceVerdict {
  bool invariant = true;
  Displacement delta;  // obfuscated minus base
};

InvarianceVerdict verify_invariance(const MovementPath& base, const MovementPath& obf);

/// True when `base` moves appear in order inside `obf` (ignoring remarks).
bool is_subsequence(const MovementPath& base, const MovementPath& obf);

}  // namespace logobf::spatial
