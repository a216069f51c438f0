#include "common.hpp"
#include "logobf/common/rng.hpp"
#include "tasks.hpp"

namespace logobf::cli {

namespace {

using nlohmann::json;

spatial::MovementPath path_from(const json& payload) {
  spatial::MovementPath p;
  if (payload.contains("path")) {
    p = spatial::path_from_json(payload.at("path").dump());
  } else {
    p = spatial::parse_moves(payload.at("moves").get<std::string>());
  }
  p.unit = payload.value("unit", "km");
  return p;
}

json rational_json(const spatial::Rational& r) { return {r.numerator(), r.denominator()}; }

constexpr const char* kQuestion =
    " How far is the final position from the starting point, and in which direction?";

}  // namespace

Generated obfuscate_direction(const bench::ObfuscationRecord& base, const DirectionParams& p) {
  const spatial::MovementPath path = path_from(base.payload);
  const std::uint64_t seed = record_seed(p.seed, base.id);
  spatial::MovementPath obf = spatial::insert_detours(path, p.pairs, seed, p.range);
  if (p.distractors > 0) obf = spatial::insert_distractors(obf, p.distractors, mix_seed(seed, 1));

  Generated g;
  auto& r = g.record;
  r.id = base.id;
  r.task = bench::Task::Direction;
  r.variant = bench::Variant::Obf;
  r.question_text = spatial::substitute_surface(obf) + kQuestion;
  r.payload = {{"path", json::parse(spatial::path_to_json(obf))}, {"unit", obf.unit}};
  r.answer = base.answer;

  json detour = json::array();
  json remarks = json::array();
  for (const auto& m : obf.moves) {
    detour.push_back(m.detour);
    remarks.push_back(m.remark);
  }
  r.provenance = {{"seed", p.seed},
                  {"record_seed", seed},
                  {"pairs", p.pairs},
                  {"magnitude_range", {p.range.lo, p.range.hi}},
                  {"distractors", p.distractors},
                  {"base_path", json::parse(spatial::path_to_json(path))},
                  {"detour", detour},
                  {"remarks", remarks}};
  if (p.verify) {
    const auto v = spatial::verify_invariance(path, obf);
    json report = {{"verdict", v.invariant ? "invariant" : "drift"},
                   {"report", spatial::report(spatial::net_displacement(obf), obf.unit)}};
    if (!v.invariant) {
      report["delta"] = {{"east", rational_json(v.delta.east)},
                         {"north", rational_json(v.delta.north)}};
      g.failure = "net displacement drifted";
    }
    r.provenance["verification"] = report;
  } else {
    r.provenance["verification"] = {{"verdict", "skipped"}};
  }
  return g;
}

std::optional<std::string> verify_direction(const bench::ObfuscationRecord& r) {
  const spatial::MovementPath base =
      spatial::path_from_json(r.provenance.at("base_path").dump());
  const spatial::MovementPath obf = path_from(r.payload);
  const auto v = spatial::verify_invariance(base, obf);
  if (!v.invariant) {
    return "net displacement drifted by (" + std::to_string(boost::rational_cast<double>(v.delta.east)) +
           " east, " + std::to_string(boost::rational_cast<double>(v.delta.north)) + " north)";
  }
  const auto& flags = r.provenance.at("detour");
  spatial::MovementPath marked = obf;
  if (flags.size() == marked.moves.size()) {
    for (std::size_t i = 0; i < flags.size(); ++i) marked.moves[i].detour = flags[i].get<bool>();
    if (!spatial::is_subsequence(base, marked)) return "base moves are not kept in order";
  }
  return std::nullopt;
}

}  // namespace logobf::cli
