#include "logobf/kinship/substitution.hpp"

#include <cctype>

#include <json.hpp>

#include "logobf/common/rng.hpp"

namespace logobf::kin {

std::string_view level_name(Level l) { return l == Level::L1 ? "l1" : "l2"; }

Level parse_level(std::string_view s) {
  if (s == "l1" || s == "L1") return Level::L1;
  if (s == "l2" || s == "L2") return Level::L2;
  throw InvalidArgument("unknown obfuscation level '" + std::string(s) + "'");
}

namespace {

Assumption parse_assumption(const nlohmann::json& j) {
  Assumption a;
  const std::string type = j.at("type").get<std::string>();
  if (type == "reading") {
    a.type = Assumption::Type::Reading;
    a.step = j.at("step").get<std::size_t>();
    a.reading = j.at("reading").get<std::string>();
  } else if (type == "excludes") {
    a.type = Assumption::Type::Excludes;
    a.excluded = parse_kind(j.at("relation").get<std::string>());
  } else {
    throw TableError("unknown assumption type '" + type + "'");
  }
  a.note = j.value("note", "");
  return a;
}

}  // namespace

SubstitutionTable SubstitutionTable::from_json(std::string_view json) {
  SubstitutionTable t;
  try {
    const auto doc = nlohmann::json::parse(json);
    for (const auto& e : doc.at("entries")) {
      SubstitutionEntry entry;
      entry.level = parse_level(e.at("level").get<std::string>());
      entry.word = e.at("word").get<std::string>();
      entry.substitution = e.at("substitution").get<std::string>();
      if (!find_word(entry.word)) throw TableError("table word '" + entry.word + "' is unknown");
      parse_chain(entry.substitution);  // rejects unknown vocabulary early
      for (const auto& a : e.value("assumptions", nlohmann::json::array())) {
        entry.assumptions.push_back(parse_assumption(a));
      }
      entry.flagged = e.value("flagged", false);
      entry.note = e.value("note", "");
      t.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw TableError(std::string("malformed substitution table: ") + ex.what());
  } catch (const InvalidArgument& ex) {
    throw TableError(std::string("malformed substitution table: ") + ex.what());
  } catch (const UnknownRelationWord& ex) {
    throw TableError(std::string("malformed substitution table: ") + ex.what());
  }
  return t;
}

const SubstitutionTable& SubstitutionTable::builtin() {
  static const SubstitutionTable table = from_json(detail::embedded_table_json());
  return table;
}

std::vector<const SubstitutionEntry*> SubstitutionTable::lookup(Level level,
                                                                std::string_view key) const {
  std::vector<const SubstitutionEntry*> out;
  for (const auto& e : entries_) {
    if (e.level == level && canonical_key(e.word) == key) out.push_back(&e);
  }
  return out;
}

SubstitutedPuzzle substitute_once(const Puzzle& puzzle, Level level, std::uint64_t seed,
                                  const SubstitutionTable& table) {
  struct Site {
    std::size_t statement;
    std::size_t step;
    std::vector<const SubstitutionEntry*> options;
  };
  std::vector<Site> sites;
  for (std::size_t s = 0; s < puzzle.statements.size(); ++s) {
    const auto& steps = puzzle.statements[s].chain.steps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].only) continue;
      auto options = table.lookup(level, steps[i].key);
      if (!options.empty()) sites.push_back({s, i, std::move(options)});
    }
  }
  if (sites.empty()) {
    throw NoSubstitutableWord("no relation word of the puzzle has a " +
                              std::string(level_name(level)) + " substitution");
  }

  SeededRng rng(seed);
  const Site& site = sites[rng.index(sites.size())];
  const SubstitutionEntry& entry = *site.options[rng.index(site.options.size())];
  const ChainStep& step = puzzle.statements[site.statement].chain.steps[site.step];

  std::string inserted = entry.substitution;
  const auto first = static_cast<unsigned char>(step.text.front());
  inserted.front() = static_cast<char>(std::isupper(first)
                                           ? std::toupper(static_cast<unsigned char>(inserted[0]))
                                           : std::tolower(static_cast<unsigned char>(inserted[0])));

  SubstitutedPuzzle out;
  out.text = puzzle.text.substr(0, step.offset) + inserted +
             puzzle.text.substr(step.offset + step.length);
  auto& prov = out.provenance;
  prov.word = puzzle.text.substr(step.offset, step.length);
  prov.substitution = inserted;
  prov.offset = step.offset;
  prov.original_length = step.length;
  prov.level = level;
  prov.statement = site.statement;
  prov.first_step = site.step;
  prov.step_count = parse_chain(entry.substitution).steps.size();
  prov.assumptions = entry.assumptions;
  prov.flagged = entry.flagged;
  return out;
}

std::string_view verdict_name(KinshipVerdict::Kind k) {
  switch (k) {
    case KinshipVerdict::Kind::Equivalent: return "equivalent";
    case KinshipVerdict::Kind::Divergent: return "divergent";
    case KinshipVerdict::Kind::Ambiguous: return "ambiguous";
  }
  return "?";
}

KinshipVerdict verify_kinship(const Puzzle& base, const Puzzle& obfuscated,
                              const std::vector<ScopedAssumptions>& assumptions,
                              const ResolveOptions& opts) {
  KinshipVerdict v;
  try {
    v.base = resolve_puzzle(base, {}, opts).relation;
  } catch (const Error& e) {
    v.kind = KinshipVerdict::Kind::Ambiguous;
    v.reason = std::string("base puzzle: ") + e.what();
    return v;
  }
  try {
    v.obfuscated = resolve_puzzle(obfuscated, assumptions, opts).relation;
  } catch (const Ambiguous& e) {
    v.kind = KinshipVerdict::Kind::Ambiguous;
    v.reason = std::string("obfuscated puzzle: ") + e.what();
    return v;
  } catch (const Error& e) {
    v.kind = KinshipVerdict::Kind::Divergent;
    v.reason = std::string("obfuscated puzzle: ") + e.what();
    return v;
  }
  if (subsumes(*v.base, *v.obfuscated)) {
    v.kind = KinshipVerdict::Kind::Equivalent;
  } else {
    v.kind = KinshipVerdict::Kind::Divergent;
    v.reason = "base resolves to " + relation_name(*v.base) + ", obfuscated to " +
               relation_name(*v.obfuscated);
  }
  return v;
}

}  // namespace logobf::kin
