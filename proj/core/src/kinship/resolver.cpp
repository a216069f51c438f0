#include "logobf/kinship/resolver.hpp"

#include <algorithm>
#include <limits>

namespace logobf::kin {

Ambiguous::Ambiguous(std::string message, std::vector<CanonicalRelation> candidates)
    : Error(std::move(message)), candidates_(std::move(candidates)) {}

namespace {

using PersonId = FamilyGraph::PersonId;

struct Uniqueness {
  PersonId base;
  const RelationWord* word;
  PersonId result;
};

struct Exclusion {
  PersonId start;
  PersonId end;
  RelationKind kind;
};

struct World {
  FamilyGraph g;
  std::size_t cost = 0;
  std::vector<Uniqueness> uniques;
  std::vector<Exclusion> exclusions;
};

struct Branch {
  World w;
  PersonId at;
  std::vector<PersonId> scope_start;
};

bool gender_ok(const FamilyGraph& g, PersonId p, Gender want) {
  return want == Gender::Unknown || g.gender(p) == Gender::Unknown || g.gender(p) == want;
}

// Applies one primitive hop; every way of taking it becomes a branch.
std::vector<Branch> hop(const Branch& b, const PrimitiveStep& s) {
  std::vector<Branch> out;
  auto take = [&](Branch next, PersonId who, std::size_t extra) {
    if (!next.w.g.set_gender(who, s.gender)) return;
    next.at = who;
    next.w.cost += extra;
    out.push_back(std::move(next));
  };
  Branch base = b;
  switch (s.kind) {
    case StepKind::Parent:
      for (PersonId p : base.w.g.ensure_parents(b.at)) {
        if (gender_ok(base.w.g, p, s.gender)) take(base, p, 0);
      }
      break;
    case StepKind::Spouse: {
      const PersonId sp = base.w.g.ensure_spouse(b.at);
      if (gender_ok(base.w.g, sp, s.gender)) take(base, sp, 0);
      break;
    }
    case StepKind::Child: {
      base.w.g.ensure_spouse(b.at);
      for (PersonId c : base.w.g.children(b.at)) {
        if (gender_ok(base.w.g, c, s.gender)) take(base, c, 0);
      }
      Branch fresh = base;
      const PersonId kid = fresh.w.g.add_child(b.at, s.gender);
      take(std::move(fresh), kid, 1);
      break;
    }
    case StepKind::Sibling: {
      base.w.g.ensure_parents(b.at);
      for (PersonId c : base.w.g.siblings(b.at)) {
        if (gender_ok(base.w.g, c, s.gender)) take(base, c, 0);
      }
      Branch fresh = base;
      const PersonId sib = fresh.w.g.add_sibling(b.at, s.gender);
      take(std::move(fresh), sib, 1);
      break;
    }
  }
  return out;
}

std::vector<PersonId> neighbours(const FamilyGraph& g, PersonId p, StepKind k) {
  switch (k) {
    case StepKind::Parent: return g.parents(p);
    case StepKind::Child: return g.children(p);
    case StepKind::Sibling: return g.siblings(p);
    case StepKind::Spouse: {
      auto s = g.spouse(p);
      return s ? std::vector<PersonId>{*s} : std::vector<PersonId>{};
    }
  }
  return {};
}

// Everyone currently in the graph that `word` can denote from `base`.
std::vector<PersonId> reach(const FamilyGraph& g, PersonId base, const RelationWord& word) {
  std::vector<PersonId> out;
  for (const auto& r : word.readings) {
    std::vector<PersonId> frontier{base};
    for (const auto& s : r.steps) {
      std::vector<PersonId> next;
      for (PersonId x : frontier) {
        for (PersonId y : neighbours(g, x, s.kind)) {
          if (gender_ok(g, y, s.gender) &&
              std::find(next.begin(), next.end(), y) == next.end()) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    for (PersonId x : frontier) {
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return out;
}

Gender final_gender(const RelationWord& w) { return w.readings.front().steps.back().gender; }

// Enforces "only" constraints (forcing unknown genders where that is the
// sole way to keep the denoted person unique) and declared exclusions.
bool finalize(World& w) {
  for (int round = 0; round < 32; ++round) {
    bool changed = false;
    for (const auto& u : w.uniques) {
      const Gender want = final_gender(*u.word);
      for (PersonId other : reach(w.g, u.base, *u.word)) {
        if (other == u.result) continue;
        if (want == Gender::Unknown) return false;
        const Gender got = w.g.gender(other);
        if (got == want) return false;
        if (got == Gender::Unknown) {
          if (!w.g.set_gender(other, opposite(want))) return false;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  for (const auto& e : w.exclusions) {
    auto rel = w.g.relation(e.end, e.start);
    if (rel && rel->kind == e.kind) return false;
  }
  return true;
}

std::vector<Branch> walk(std::vector<Branch> branches, const RelationChain& chain,
                         const std::vector<const ScopedAssumptions*>& scopes,
                         const ResolveOptions& opts) {
  for (auto& b : branches) b.scope_start.assign(scopes.size(), 0);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& step = chain.steps[i];
    const RelationWord& word = step.word();

    std::vector<const Reading*> readings;
    for (const auto& r : word.readings) readings.push_back(&r);
    for (const auto* sc : scopes) {
      if (i < sc->first_step || i >= sc->first_step + sc->step_count) continue;
      for (const auto& a : sc->assumptions) {
        if (a.type != Assumption::Type::Reading || a.step != i - sc->first_step) continue;
        std::erase_if(readings, [&](const Reading* r) { return r->name != a.reading; });
        if (readings.empty()) {
          throw InvalidArgument("'" + word.display + "' has no reading '" + a.reading + "'");
        }
      }
    }

    std::vector<Branch> next;
    for (auto& b : branches) {
      for (std::size_t s = 0; s < scopes.size(); ++s) {
        if (scopes[s]->first_step == i) b.scope_start[s] = b.at;
      }
      const PersonId start = b.at;
      for (const Reading* r : readings) {
        std::vector<Branch> cur{b};
        for (const auto& prim : r->steps) {
          std::vector<Branch> stepped;
          for (const auto& c : cur) {
            for (auto& n : hop(c, prim)) stepped.push_back(std::move(n));
          }
          cur = std::move(stepped);
          if (cur.size() > opts.max_worlds) throw Error("kinship resolution: too many branches");
        }
        for (auto& c : cur) {
          if (step.only) c.w.uniques.push_back({start, &word, c.at});
          next.push_back(std::move(c));
        }
      }
      if (next.size() > opts.max_worlds) throw Error("kinship resolution: too many branches");
    }
    for (auto& b : next) {
      for (std::size_t s = 0; s < scopes.size(); ++s) {
        const auto* sc = scopes[s];
        if (sc->step_count == 0 || sc->first_step + sc->step_count - 1 != i) continue;
        for (const auto& a : sc->assumptions) {
          if (a.type == Assumption::Type::Excludes) {
            b.w.exclusions.push_back({b.scope_start[s], b.at, a.excluded});
          }
        }
      }
    }
    branches = std::move(next);
  }
  return branches;
}

struct Outcome {
  std::size_t cost;
  std::optional<CanonicalRelation> relation;
};

Resolution join(const std::vector<Outcome>& outcomes) {
  if (outcomes.empty()) throw Inconsistent("no family graph satisfies the constraints");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& o : outcomes) best = std::min(best, o.cost);

  std::vector<CanonicalRelation> named;
  std::size_t unnamed = 0;
  for (const auto& o : outcomes) {
    if (o.cost != best) continue;
    if (!o.relation) {
      ++unnamed;
      continue;
    }
    if (std::find(named.begin(), named.end(), *o.relation) == named.end()) {
      named.push_back(*o.relation);
    }
  }
  if (named.empty()) throw VocabularyGap("the resolved relation has no vocabulary term");
  if (unnamed > 0) throw Ambiguous("some minimal family graphs give an unnamed relation", named);

  Resolution res;
  res.relation = named.front();
  res.cost = best;
  for (const auto& r : named) {
    if (r.kind != res.relation.kind) {
      throw Ambiguous("minimal family graphs disagree on the relation", named);
    }
    if (r.gender != res.relation.gender) res.relation.gender = Gender::Unknown;
    if (r.side != res.relation.side) res.relation.side = Side::Unknown;
  }
  for (const auto& o : outcomes) res.models += o.cost == best ? 1 : 0;
  return res;
}

std::vector<const ScopedAssumptions*> scopes_for(const std::vector<ScopedAssumptions>& all,
                                                 std::size_t statement) {
  std::vector<const ScopedAssumptions*> out;
  for (const auto& s : all) {
    if (s.statement == statement) out.push_back(&s);
  }
  return out;
}

}  // namespace

Resolution resolve_chain(const RelationChain& chain, const FamilyGraph& context,
                         const std::vector<ScopedAssumptions>& assumptions,
                         const std::string& speaker, const ResolveOptions& opts) {
  if (chain.steps.empty()) throw InvalidArgument("empty relation chain");
  std::optional<PersonId> anchor;
  switch (chain.anchor.kind) {
    case Anchor::Kind::Named: anchor = context.find(chain.anchor.name); break;
    case Anchor::Kind::Speaker: anchor = context.find(speaker); break;
    case Anchor::Kind::None: break;
  }
  if (!anchor) throw InvalidArgument("chain anchor is not a person in the graph");

  std::vector<Branch> start{{World{context, 0, {}, {}}, *anchor, {}}};
  auto branches = walk(std::move(start), chain, scopes_for(assumptions, 0), opts);

  // A chain names someone other than its anchor; walks that return to the
  // anchor only count when nothing else survives (e.g. "wife's husband").
  std::vector<Outcome> outcomes;
  std::vector<Outcome> returns;
  for (auto& b : branches) {
    if (!finalize(b.w)) continue;
    auto& dst = b.at == *anchor ? returns : outcomes;
    dst.push_back({b.w.cost, b.w.g.relation(b.at, *anchor)});
  }
  return join(outcomes.empty() ? returns : outcomes);
}

Resolution resolve_puzzle(const Puzzle& puzzle, const std::vector<ScopedAssumptions>& assumptions,
                          const ResolveOptions& opts) {
  std::vector<World> worlds{World{}};
  std::vector<bool> done(puzzle.statements.size(), false);

  for (std::size_t round = 0; round < puzzle.statements.size(); ++round) {
    const FamilyGraph& names = worlds.front().g;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < done.size() && !pick; ++i) {
      if (!done[i] && names.find(puzzle.statements[i].anchor)) pick = i;
    }
    if (!pick) {
      auto is_pending_target = [&](const std::string& name) {
        for (std::size_t j = 0; j < done.size(); ++j) {
          if (!done[j] && puzzle.statements[j].target == name) return true;
        }
        return false;
      };
      for (std::size_t i = 0; i < done.size() && !pick; ++i) {
        const Statement& st = puzzle.statements[i];
        if (!done[i] && !names.find(st.target) && !is_pending_target(st.anchor)) pick = i;
      }
      if (!pick) throw Inconsistent("statements cannot be ordered from a known person");
      for (auto& w : worlds) w.g.add_person(Gender::Unknown, puzzle.statements[*pick].anchor);
    }
    const Statement& st = puzzle.statements[*pick];
    done[*pick] = true;

    std::vector<Branch> start;
    for (auto& w : worlds) {
      const PersonId a = *w.g.find(st.anchor);
      start.push_back({std::move(w), a, {}});
    }
    auto branches = walk(std::move(start), st.chain, scopes_for(assumptions, *pick), opts);

    std::vector<World> next;
    for (auto& b : branches) {
      if (auto t = b.w.g.find(st.target)) {
        if (*t != b.at) continue;
      } else {
        if (!b.w.g.name_of(b.at).empty()) continue;  // named persons are distinct
        b.w.g.set_name(b.at, st.target);
      }
      if (!b.w.g.set_gender(b.at, st.target_gender)) continue;
      next.push_back(std::move(b.w));
    }
    if (next.empty()) throw Inconsistent("statement '" + st.target + "' cannot be satisfied");
    worlds = std::move(next);
  }

  std::vector<Outcome> outcomes;
  for (auto& w : worlds) {
    auto t = w.g.find(puzzle.query_target);
    auto a = w.g.find(puzzle.query_anchor);
    if (!t || !a) throw InvalidArgument("query mentions a person no statement introduces");
    if (!finalize(w)) continue;
    outcomes.push_back({w.cost, w.g.relation(*t, *a)});
  }
  return join(outcomes);
}

}  // namespace logobf::kin
