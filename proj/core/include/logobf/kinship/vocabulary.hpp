#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "logobf/common/error.hpp"

namespace logobf::kin {

enum class Gender : std::uint8_t { Unknown, Male, Female };

Gender opposite(Gender g);
std::string_view gender_name(Gender g);
Gender parse_gender(std::string_view s);

enum class StepKind : std::uint8_t { Parent, Child, Spouse, Sibling };

/// One hop in the family graph, optionally restricted to one gender.
struct PrimitiveStep {
  StepKind kind;
  Gender gender = Gender::Unknown;

  friend bool operator==(const PrimitiveStep&, const PrimitiveStep&) = default;
};

/// A fixed expansion of a relation word, e.g. uncle = parent's brother.
struct Reading {
  std::string name;
  std::vector<PrimitiveStep> steps;
};

struct RelationWord {
  std::string key;      // canonical spelling, letters only
  std::string display;  // e.g. "sister-in-law"
  std::vector<Reading> readings;
};

/// Lowercases and drops every non-letter, so "Sister-in-law",
/// "sister inlaw" and "sisterinlaw" share the key "sisterinlaw".
std::string canonical_key(std::string_view text);

/// nullptr when the spelling is not in the vocabulary.
const RelationWord* find_word(std::string_view text);
const std::vector<RelationWord>& vocabulary();

enum class RelationKind : std::uint8_t {
  Self,
  Parent,
  Grandparent,
  GreatGrandparent,
  Child,
  Grandchild,
  GreatGrandchild,
  Sibling,
  ParentSibling,
  SiblingChild,
  Cousin,
  Spouse,
  ParentInLaw,
  ChildInLaw,
  SiblingInLaw,
  GrandchildInLaw,
};

std::string_view kind_name(RelationKind k);
RelationKind parse_kind(std::string_view s);

enum class Side : std::uint8_t { Unknown, Paternal, Maternal };

std::string_view side_name(Side s);

/// Relation of a subject to a reference person. Gender is the subject's;
/// side says through which parent of the reference the relation runs.
struct CanonicalRelation {
  RelationKind kind = RelationKind::Self;
  Gender gender = Gender::Unknown;
  Side side = Side::Unknown;

  friend bool operator==(const CanonicalRelation&, const CanonicalRelation&) = default;
};

/// English word for the relation: "father", "maternal uncle", "sister-in-law".
std::string relation_name(const CanonicalRelation& r);

/// True when `specific` is an instance of `general`: same kind, and gender
/// and side agree wherever `general` fixes them.
bool subsumes(const CanonicalRelation& general, const CanonicalRelation& specific);

}  // namespace logobf::kin
