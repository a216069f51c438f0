#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/kinship/vocabulary.hpp"

namespace logobf::kin {

/// Monogamous family graph. Every union is a couple of opposite gender and
/// children belong to a couple, so a person has at most two parents and at
/// most one spouse. Parents are materialized lazily: asking for the parents
/// of someone without known parents creates a fresh father and mother.
class FamilyGraph {
 public:
  using PersonId = std::size_t;

  PersonId add_person(Gender g = Gender::Unknown, std::string name = {});
  std::size_t size() const { return persons_.size(); }

  void set_name(PersonId p, std::string name);
  const std::string& name_of(PersonId p) const { return persons_.at(p).name; }
  std::optional<PersonId> find(std::string_view name) const;

  Gender gender(PersonId p) const { return persons_.at(p).gender; }
  /// Fixes a gender and propagates the opposite one to the spouse. Returns
  /// false on conflict (the graph is then unusable).
  bool set_gender(PersonId p, Gender g);

  /// Records `parent` as a parent of `child`, creating the other parent if
  /// needed. Throws InvalidArgument when this contradicts the graph.
  void add_parent(PersonId parent, PersonId child);
  /// Throws InvalidArgument if either person already has a spouse.
  void add_spouses(PersonId a, PersonId b);

  std::optional<PersonId> spouse(PersonId p) const;
  /// Father and mother, if known.
  std::vector<PersonId> parents(PersonId p) const;
  std::vector<PersonId> children(PersonId p) const;
  std::vector<PersonId> siblings(PersonId p) const;

  // Growth primitives used by the resolver.
  std::vector<PersonId> ensure_parents(PersonId p);
  PersonId ensure_spouse(PersonId p);
  PersonId add_child(PersonId p, Gender g);
  PersonId add_sibling(PersonId p, Gender g);

  /// Blood-line distance: `target` descends `down` generations from the
  /// ancestor `up` generations above `anchor`.
  struct BloodLink {
    std::size_t up;
    std::size_t down;
    Side side;
  };
  std::optional<BloodLink> blood(PersonId anchor, PersonId target) const;

  /// Names `target` relative to `anchor`; nullopt if no vocabulary term fits.
  std::optional<CanonicalRelation> relation(PersonId target, PersonId anchor) const;

 private:
  struct Person {
    Gender gender = Gender::Unknown;
    std::string name;
    std::optional<std::size_t> parents;  // couple
    std::optional<std::size_t> uni;      // couple
  };
  struct Couple {
    PersonId a;
    PersonId b;
    std::vector<PersonId> children;
  };

  std::size_t new_couple(PersonId a, PersonId b);

  std::vector<Person> persons_;
  std::vector<Couple> couples_;
};

}  // namespace logobf::kin
