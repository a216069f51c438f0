#include "logobf/spatial/path.hpp"

#include <cctype>
#include <charconv>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace logobf::spatial {

namespace {

using boost::multiprecision::cpp_int;

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::int64_t parse_i64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("'" + std::string(s) + "' is not an integer");
  }
  return v;
}

Rational checked_magnitude(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("magnitude denominator is zero");
  Rational r(num, den);
  if (r < 0) throw InvalidArgument("magnitude is negative");
  return r;
}

}  // namespace

std::string_view direction_code(Direction d) {
  switch (d) {
    case Direction::N: return "N";
    case Direction::S: return "S";
    case Direction::E: return "E";
    case Direction::W: return "W";
  }
  return "?";
}

std::string_view direction_word(Direction d) {
  switch (d) {
    case Direction::N: return "north";
    case Direction::S: return "south";
    case Direction::E: return "east";
    case Direction::W: return "west";
  }
  return "?";
}

Direction parse_direction(std::string_view s) {
  const std::string l = lower(s);
  if (l == "n" || l == "north") return Direction::N;
  if (l == "s" || l == "south") return Direction::S;
  if (l == "e" || l == "east") return Direction::E;
  if (l == "w" || l == "west") return Direction::W;
  throw InvalidArgument("unknown direction '" + std::string(s) + "'");
}

Direction inverse(Direction d) {
  switch (d) {
    case Direction::N: return Direction::S;
    case Direction::S: return Direction::N;
    case Direction::E: return Direction::W;
    case Direction::W: return Direction::E;
  }
  return d;
}

std::string_view bearing_name(Bearing b) {
  switch (b) {
    case Bearing::Origin: return "Origin";
    case Bearing::North: return "North";
    case Bearing::South: return "South";
    case Bearing::East: return "East";
    case Bearing::West: return "West";
    case Bearing::NorthEast: return "North-East";
    case Bearing::NorthWest: return "North-West";
    case Bearing::SouthEast: return "South-East";
    case Bearing::SouthWest: return "South-West";
  }
  return "?";
}

Displacement net_displacement(const MovementPath& p) {
  Displacement d;
  for (const auto& m : p.moves) {
    switch (m.direction) {
      case Direction::N: d.north += m.magnitude; break;
      case Direction::S: d.north -= m.magnitude; break;
      case Direction::E: d.east += m.magnitude; break;
      case Direction::W: d.east -= m.magnitude; break;
    }
  }
  return d;
}

Bearing bearing(const Displacement& d) {
  const int ns = d.north > 0 ? 1 : d.north < 0 ? -1 : 0;
  const int ew = d.east > 0 ? 1 : d.east < 0 ? -1 : 0;
  if (ns == 0 && ew == 0) return Bearing::Origin;
  if (ew == 0) return ns > 0 ? Bearing::North : Bearing::South;
  if (ns == 0) return ew > 0 ? Bearing::East : Bearing::West;
  if (ns > 0) return ew > 0 ? Bearing::NorthEast : Bearing::NorthWest;
  return ew > 0 ? Bearing::SouthEast : Bearing::SouthWest;
}

std::string format_distance(const Displacement& d, int decimals) {
  if (decimals < 0 || decimals > 9) throw InvalidArgument("decimals must be in [0, 9]");
  // distance^2 = A / B exactly.
  const cpp_int en = d.east.numerator(), ed = d.east.denominator();
  const cpp_int nn = d.north.numerator(), nd = d.north.denominator();
  const cpp_int a = en * en * nd * nd + nn * nn * ed * ed;
  const cpp_int b = ed * ed * nd * nd;
  cpp_int scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // r = floor(scale * sqrt(A/B) + 1/2) = (isqrt(floor(4 scale^2 A / B)) + 1) / 2
  const cpp_int s = boost::multiprecision::sqrt(cpp_int(4 * scale * scale * a / b));
  const cpp_int r = (s + 1) / 2;
  std::string whole = cpp_int(r / scale).str();
  if (decimals == 0) return whole;
  std::string frac = cpp_int(r % scale).str();
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return whole + "." + frac;
}

std::string report(const Displacement& d, std::string_view unit) {
  return format_distance(d) + " " + std::string(unit) + " away, " +
         std::string(bearing_name(bearing(d)));
}

std::string path_to_json(const MovementPath& p) {
  auto arr = nlohmann::json::array();
  for (const auto& m : p.moves) {
    arr.push_back({std::string(direction_code(m.direction)), m.magnitude.numerator(),
                   m.magnitude.denominator()});
  }
  return arr.dump();
}

MovementPath path_from_json(std::string_view json) {
  MovementPath p;
  try {
    for (const auto& t : nlohmann::json::parse(json)) {
      if (!t.is_array() || t.size() != 3) throw InvalidArgument("move must be a triple");
      Move m;
      m.direction = parse_direction(t.at(0).get<std::string>());
      m.magnitude = checked_magnitude(t.at(1).get<std::int64_t>(), t.at(2).get<std::int64_t>());
      p.moves.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed path JSON: ") + e.what());
  }
  return p;
}

MovementPath parse_moves(std::string_view text) {
  MovementPath p;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ',')) {
      ++i;
    }
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != ',') {
      ++j;
    }
    const std::string_view tok = text.substr(i, j - i);
    if (tok.size() < 2) throw InvalidArgument("malformed move '" + std::string(tok) + "'");
    Move m;
    m.direction = parse_direction(tok.substr(0, 1));
    const std::string_view mag = tok.substr(1);
    if (auto slash = mag.find('/'); slash != std::string_view::npos) {
      m.magnitude = checked_magnitude(parse_i64(mag.substr(0, slash)),
                                      parse_i64(mag.substr(slash + 1)));
    } else {
      m.magnitude = checked_magnitude(parse_i64(mag), 1);
    }
    p.moves.push_back(std::move(m));
    i = j;
  }
  return p;
}

std::string format_moves(const MovementPath& p) {
  std::string out;
  for (const auto& m : p.moves) {
    if (!out.empty()) out += ' ';
    out += direction_code(m.direction);
    out += std::to_string(m.magnitude.numerator());
    if (m.magnitude.denominator() != 1) out += "/" + std::to_string(m.magnitude.denominator());
  }
  return out;
}

namespace {

// Clockwise order N, E, S, W.
int clockwise_index(Direction d) {
  switch (d) {
    case Direction::N: return 0;
    case Direction::E: return 1;
    case Direction::S: return 2;
    case Direction::W: return 3;
  }
  return 0;
}

Direction from_clockwise_index(int i) {
  static constexpr Direction kOrder[] = {Direction::N, Direction::E, Direction::S, Direction::W};
  return kOrder[((i % 4) + 4) % 4];
}

}  // namespace

Turn turn_between(Direction from, Direction to) {
  switch ((clockwise_index(to) - clockwise_index(from) + 4) % 4) {
    case 0: return Turn::Straight;
    case 1: return Turn::Right;
    case 2: return Turn::Back;
    default: return Turn::Left;
  }
}

MovementPath compile_relative(Direction initial_heading, const std::vector<RelativeStep>& steps) {
  MovementPath p;
  int heading = clockwise_index(initial_heading);
  for (const auto& s : steps) {
    switch (s.turn) {
      case Turn::Straight: break;
      case Turn::Right: heading += 1; break;
      case Turn::Back: heading += 2; break;
      case Turn::Left: heading += 3; break;
    }
    if (s.magnitude < 0) throw InvalidArgument("magnitude is negative");
    p.moves.push_back({from_clockwise_index(heading), s.magnitude, false, {}});
  }
  return p;
}

}  // namespace logobf::spatial
