#include "logobf/kinship/family_graph.hpp"

#include <algorithm>

namespace logobf::kin {

namespace {
constexpr std::size_t kMaxGenerations = 4;
}

FamilyGraph::PersonId FamilyGraph::add_person(Gender g, std::string name) {
  if (!name.empty() && find(name)) {
    throw InvalidArgument("person '" + name + "' already exists");
  }
  persons_.push_back({g, std::move(name), std::nullopt, std::nullopt});
  return persons_.size() - 1;
}

void FamilyGraph::set_name(PersonId p, std::string name) {
  if (auto other = find(name); other && *other != p) {
    throw InvalidArgument("person '" + name + "' already exists");
  }
  persons_.at(p).name = std::move(name);
}

std::optional<FamilyGraph::PersonId> FamilyGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < persons_.size(); ++i) {
    if (!persons_[i].name.empty() && persons_[i].name == name) return i;
  }
  return std::nullopt;
}

bool FamilyGraph::set_gender(PersonId p, Gender g) {
  if (g == Gender::Unknown) return true;
  Person& person = persons_.at(p);
  if (person.gender == g) return true;
  if (person.gender != Gender::Unknown) return false;
  person.gender = g;
  if (auto s = spouse(p)) return set_gender(*s, opposite(g));
  return true;
}

std::size_t FamilyGraph::new_couple(PersonId a, PersonId b) {
  couples_.push_back({a, b, {}});
  const std::size_t c = couples_.size() - 1;
  persons_[a].uni = c;
  persons_[b].uni = c;
  return c;
}

void FamilyGraph::add_parent(PersonId parent, PersonId child) {
  if (parent == child) throw InvalidArgument("a person cannot be their own parent");
  Person& ch = persons_.at(child);
  if (ch.parents) {
    const Couple& c = couples_[*ch.parents];
    if (c.a == parent || c.b == parent) return;
    throw InvalidArgument("child already has two parents");
  }
  std::size_t couple;
  if (persons_.at(parent).uni) {
    couple = *persons_[parent].uni;
  } else {
    const PersonId other = add_person(opposite(persons_[parent].gender));
    couple = new_couple(parent, other);
  }
  persons_[child].parents = couple;
  couples_[couple].children.push_back(child);
}

void FamilyGraph::add_spouses(PersonId a, PersonId b) {
  if (a == b || persons_.at(a).uni || persons_.at(b).uni) {
    throw InvalidArgument("spouse link contradicts the graph");
  }
  const Gender ga = persons_[a].gender;
  const Gender gb = persons_[b].gender;
  if (ga != Gender::Unknown && ga == gb) {
    throw InvalidArgument("spouses must have opposite genders");
  }
  new_couple(a, b);
  if (ga != Gender::Unknown) set_gender(b, opposite(ga));
  if (gb != Gender::Unknown) set_gender(a, opposite(gb));
}

std::optional<FamilyGraph::PersonId> FamilyGraph::spouse(PersonId p) const {
  const auto& u = persons_.at(p).uni;
  if (!u) return std::nullopt;
  const Couple& c = couples_[*u];
  return c.a == p ? c.b : c.a;
}

std::vector<FamilyGraph::PersonId> FamilyGraph::parents(PersonId p) const {
  const auto& ps = persons_.at(p).parents;
  if (!ps) return {};
  return {couples_[*ps].a, couples_[*ps].b};
}

std::vector<FamilyGraph::PersonId> FamilyGraph::children(PersonId p) const {
  const auto& u = persons_.at(p).uni;
  if (!u) return {};
  return couples_[*u].children;
}

std::vector<FamilyGraph::PersonId> FamilyGraph::siblings(PersonId p) const {
  const auto& ps = persons_.at(p).parents;
  if (!ps) return {};
  std::vector<PersonId> out;
  for (PersonId c : couples_[*ps].children) {
    if (c != p) out.push_back(c);
  }
  return out;
}

std::vector<FamilyGraph::PersonId> FamilyGraph::ensure_parents(PersonId p) {
  if (!persons_.at(p).parents) {
    const PersonId father = add_person(Gender::Male);
    const PersonId mother = add_person(Gender::Female);
    const std::size_t c = new_couple(father, mother);
    persons_[p].parents = c;
    couples_[c].children.push_back(p);
  }
  return parents(p);
}

FamilyGraph::PersonId FamilyGraph::ensure_spouse(PersonId p) {
  if (auto s = spouse(p)) return *s;
  const PersonId s = add_person(opposite(persons_.at(p).gender));
  new_couple(p, s);
  return s;
}

FamilyGraph::PersonId FamilyGraph::add_child(PersonId p, Gender g) {
  ensure_spouse(p);
  const std::size_t c = *persons_[p].uni;
  const PersonId kid = add_person(g);
  persons_[kid].parents = c;
  couples_[c].children.push_back(kid);
  return kid;
}

FamilyGraph::PersonId FamilyGraph::add_sibling(PersonId p, Gender g) {
  ensure_parents(p);
  const std::size_t c = *persons_[p].parents;
  const PersonId sib = add_person(g);
  persons_[sib].parents = c;
  couples_[c].children.push_back(sib);
  return sib;
}

std::optional<FamilyGraph::BloodLink> FamilyGraph::blood(PersonId anchor,
                                                         PersonId target) const {
  struct Anc {
    PersonId who;
    Side side;
  };
  std::vector<Anc> level{{anchor, Side::Unknown}};
  for (std::size_t up = 0; up <= kMaxGenerations && !level.empty(); ++up) {
    std::optional<BloodLink> best;
    for (const auto& a : level) {
      std::vector<PersonId> gen{a.who};
      for (std::size_t down = 0; down <= kMaxGenerations && !gen.empty(); ++down) {
        if (best && best->down <= down) break;
        if (std::find(gen.begin(), gen.end(), target) != gen.end()) {
          best = BloodLink{up, down, a.side};
          break;
        }
        std::vector<PersonId> next;
        for (PersonId x : gen) {
          for (PersonId c : children(x)) next.push_back(c);
        }
        gen = std::move(next);
      }
    }
    if (best) return best;
    std::vector<Anc> next;
    for (const auto& a : level) {
      for (PersonId p : parents(a.who)) {
        Side s = a.side;
        if (up == 0) s = gender(p) == Gender::Male ? Side::Paternal : Side::Maternal;
        next.push_back({p, s});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::optional<CanonicalRelation> FamilyGraph::relation(PersonId target, PersonId anchor) const {
  const Gender g = gender(target);
  auto make = [&](RelationKind k, Side s = Side::Unknown) {
    return CanonicalRelation{k, g, s};
  };

  if (auto b = blood(anchor, target)) {
    const auto key = std::pair{b->up, b->down};
    if (key == std::pair<std::size_t, std::size_t>{0, 0}) return make(RelationKind::Self);
    if (key == std::pair<std::size_t, std::size_t>{1, 0}) return make(RelationKind::Parent);
    if (key == std::pair<std::size_t, std::size_t>{2, 0}) {
      return make(RelationKind::Grandparent, b->side);
    }
    if (key == std::pair<std::size_t, std::size_t>{3, 0}) {
      return make(RelationKind::GreatGrandparent, b->side);
    }
    if (key == std::pair<std::size_t, std::size_t>{0, 1}) return make(RelationKind::Child);
    if (key == std::pair<std::size_t, std::size_t>{0, 2}) return make(RelationKind::Grandchild);
    if (key == std::pair<std::size_t, std::size_t>{0, 3}) {
      return make(RelationKind::GreatGrandchild);
    }
    if (key == std::pair<std::size_t, std::size_t>{1, 1}) return make(RelationKind::Sibling);
    if (key == std::pair<std::size_t, std::size_t>{2, 1}) {
      return make(RelationKind::ParentSibling, b->side);
    }
    if (key == std::pair<std::size_t, std::size_t>{1, 2}) return make(RelationKind::SiblingChild);
    if (key == std::pair<std::size_t, std::size_t>{2, 2}) return make(RelationKind::Cousin, b->side);
    return std::nullopt;
  }

  const auto own_spouse = spouse(anchor);
  if (own_spouse && *own_spouse == target) return make(RelationKind::Spouse);

  // Spouse of a blood relative.
  const auto their_spouse = spouse(target);
  if (their_spouse) {
    if (auto b = blood(anchor, *their_spouse)) {
      if (b->up == 1 && b->down == 1) return make(RelationKind::SiblingInLaw);
      if (b->up == 0 && b->down == 1) return make(RelationKind::ChildInLaw);
      if (b->up == 0 && b->down == 2) return make(RelationKind::GrandchildInLaw);
      if (b->up == 2 && b->down == 1) return make(RelationKind::ParentSibling, b->side);
      return std::nullopt;
    }
  }

  // Blood relative of the spouse.
  if (own_spouse) {
    if (auto b = blood(*own_spouse, target)) {
      if (b->up == 1 && b->down == 0) return make(RelationKind::ParentInLaw);
      if (b->up == 1 && b->down == 1) return make(RelationKind::SiblingInLaw);
      if (b->up == 1 && b->down == 2) return make(RelationKind::SiblingChild);
      return std::nullopt;
    }
    // Spouse's sibling's spouse.
    if (their_spouse) {
      if (auto b = blood(*own_spouse, *their_spouse); b && b->up == 1 && b->down == 1) {
        return make(RelationKind::SiblingInLaw);
      }
    }
  }
  return std::nullopt;
}

}  // namespace logobf::kin
