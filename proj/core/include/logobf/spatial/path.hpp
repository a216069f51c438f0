#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "logobf/common/error.hpp"

namespace logobf::spatial {

using Rational = boost::rational<std::int64_t>;

enum class Direction { N, S, E, W };

std::string_view direction_code(Direction d);  // "N", "S", "E", "W"
std::string_view direction_word(Direction d);  // "north", ...
/// Accepts codes and words in any case.
Direction parse_direction(std::string_view s);
Direction inverse(Direction d);

struct Move {
  Direction direction = Direction::N;
  Rational magnitude{0};
  /// Member of an inserted detour pair.
  bool detour = false;
  /// Zero-distance narrative sentence told after this move.
  std::string remark;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MovementPath {
  std::vector<Move> moves;
  std::string unit = "km";

  friend bool operator==(const MovementPath&, const MovementPath&) = default;
};

struct Displacement {
  Rational east{0};
  Rational north{0};

  friend bool operator==(const Displacement&, const Displacement&) = default;
};

enum class Bearing { Origin, North, South, East, West, NorthEast, NorthWest, SouthEast, SouthWest };

std::string_view bearing_name(Bearing b);  // "North-East", "Origin", ...

Displacement net_displacement(const MovementPath& p);
Bearing bearing(const Displacement& d);

/// Euclidean distance rounded half-up to `decimals` places, computed exactly
/// from the rational displacement.
std::string format_distance(const Displacement& d, int decimals = 2);

/// "5.83 km away, North-East"; "0.00 km away, Origin" for a closed path.
std::string report(const Displacement& d, std::string_view unit = "km");

/// JSON array of [direction, numerator, denominator] triples.
std::string path_to_json(const MovementPath& p);
MovementPath path_from_json(std::string_view json);

/// Compact form used by tests and the CLI: "N5 E3 S1/2".
MovementPath parse_moves(std::string_view text);
std::string format_moves(const MovementPath& p);

enum class Turn { Straight, Right, Left, Back };

struct RelativeStep {
  Turn turn = Turn::Straight;
  Rational magnitude{0};
};

/// Compiles heading-relative instructions into absolute moves from an
/// explicit initial heading.
MovementPath compile_relative(Direction initial_heading, const std::vector<RelativeStep>& steps);

/// The turn that takes heading `from` to heading `to`.
Turn turn_between(Direction from, Direction to);

}  // namespace logobf::spatial
