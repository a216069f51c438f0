#include "logobf/kinship/vocabulary.hpp"

#include <array>
#include <cctype>

namespace logobf::kin {

Gender opposite(Gender g) {
  switch (g) {
    case Gender::Male: return Gender::Female;
    case Gender::Female: return Gender::Male;
    default: return Gender::Unknown;
  }
}

std::string_view gender_name(Gender g) {
  switch (g) {
    case Gender::Male: return "male";
    case Gender::Female: return "female";
    default: return "unknown";
  }
}

Gender parse_gender(std::string_view s) {
  if (s == "male") return Gender::Male;
  if (s == "female") return Gender::Female;
  if (s == "unknown") return Gender::Unknown;
  throw InvalidArgument("unknown gender '" + std::string(s) + "'");
}

std::string canonical_key(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalpha(c)) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

namespace {

constexpr auto M = Gender::Male;
constexpr auto F = Gender::Female;
constexpr auto U = Gender::Unknown;

PrimitiveStep P(Gender g = U) { return {StepKind::Parent, g}; }
PrimitiveStep C(Gender g = U) { return {StepKind::Child, g}; }
PrimitiveStep Sp(Gender g = U) { return {StepKind::Spouse, g}; }
PrimitiveStep Sb(Gender g = U) { return {StepKind::Sibling, g}; }

RelationWord word(std::string display, std::vector<Reading> readings) {
  return {canonical_key(display), std::move(display), std::move(readings)};
}

RelationWord simple(std::string display, std::vector<PrimitiveStep> steps) {
  Reading r{display, std::move(steps)};
  return word(std::move(display), {std::move(r)});
}

std::vector<RelationWord> build() {
  std::vector<RelationWord> v;
  v.push_back(simple("father", {P(M)}));
  v.push_back(simple("mother", {P(F)}));
  v.push_back(simple("parent", {P()}));
  v.push_back(simple("husband", {Sp(M)}));
  v.push_back(simple("wife", {Sp(F)}));
  v.push_back(simple("spouse", {Sp()}));
  v.push_back(simple("son", {C(M)}));
  v.push_back(simple("daughter", {C(F)}));
  v.push_back(simple("child", {C()}));
  v.push_back(simple("brother", {Sb(M)}));
  v.push_back(simple("sister", {Sb(F)}));
  v.push_back(simple("sibling", {Sb()}));

  v.push_back(simple("grandfather", {P(), P(M)}));
  v.push_back(simple("grandmother", {P(), P(F)}));
  v.push_back(simple("grandparent", {P(), P()}));
  v.push_back(simple("paternal grandfather", {P(M), P(M)}));
  v.push_back(simple("paternal grandmother", {P(M), P(F)}));
  v.push_back(simple("maternal grandfather", {P(F), P(M)}));
  v.push_back(simple("maternal grandmother", {P(F), P(F)}));
  v.push_back(simple("great-grandfather", {P(), P(), P(M)}));
  v.push_back(simple("great-grandmother", {P(), P(), P(F)}));

  v.push_back(simple("grandson", {C(), C(M)}));
  v.push_back(simple("granddaughter", {C(), C(F)}));
  v.push_back(simple("grandchild", {C(), C()}));
  v.push_back(simple("great-grandson", {C(), C(), C(M)}));
  v.push_back(simple("great-granddaughter", {C(), C(), C(F)}));

  v.push_back(word("uncle", {{"parent's brother", {P(), Sb(M)}},
                             {"parent's sister's husband", {P(), Sb(F), Sp(M)}}}));
  v.push_back(word("aunt", {{"parent's sister", {P(), Sb(F)}},
                            {"parent's brother's wife", {P(), Sb(M), Sp(F)}}}));
  v.push_back(simple("paternal uncle", {P(M), Sb(M)}));
  v.push_back(simple("paternal aunt", {P(M), Sb(F)}));
  v.push_back(simple("maternal uncle", {P(F), Sb(M)}));
  v.push_back(simple("maternal aunt", {P(F), Sb(F)}));

  for (auto [name, g] : std::array<std::pair<const char*, Gender>, 2>{
           {{"niece", F}, {"nephew", M}}}) {
    const std::string noun = g == F ? "daughter" : "son";
    v.push_back(word(name, {{"brother's " + noun, {Sb(M), C(g)}},
                            {"sister's " + noun, {Sb(F), C(g)}},
                            {"spouse's brother's " + noun, {Sp(), Sb(M), C(g)}},
                            {"spouse's sister's " + noun, {Sp(), Sb(F), C(g)}}}));
  }
  for (auto [name, g] : std::array<std::pair<const char*, Gender>, 3>{
           {{"cousin", U}, {"cousin brother", M}, {"cousin sister", F}}}) {
    v.push_back(word(name, {{"paternal cousin", {P(M), Sb(), C(g)}},
                            {"maternal cousin", {P(F), Sb(), C(g)}}}));
  }

  v.push_back(word("sister-in-law", {{"brother's wife", {Sb(M), Sp(F)}},
                                     {"spouse's sister", {Sp(), Sb(F)}},
                                     {"spouse's brother's wife", {Sp(), Sb(M), Sp(F)}}}));
  v.push_back(word("brother-in-law", {{"sister's husband", {Sb(F), Sp(M)}},
                                      {"spouse's brother", {Sp(), Sb(M)}},
                                      {"spouse's sister's husband", {Sp(), Sb(F), Sp(M)}}}));
  v.push_back(simple("daughter-in-law", {C(M), Sp(F)}));
  v.push_back(simple("son-in-law", {C(F), Sp(M)}));
  v.push_back(simple("father-in-law", {Sp(), P(M)}));
  v.push_back(simple("mother-in-law", {Sp(), P(F)}));
  v.push_back(simple("granddaughter-in-law", {C(), C(M), Sp(F)}));
  v.push_back(simple("grandson-in-law", {C(), C(F), Sp(M)}));
  return v;
}

constexpr std::array<std::string_view, 16> kKindNames = {
    "self",        "parent",         "grandparent",    "great_grandparent",
    "child",       "grandchild",     "great_grandchild", "sibling",
    "parent_sibling", "sibling_child", "cousin",       "spouse",
    "parent_in_law", "child_in_law", "sibling_in_law", "grandchild_in_law",
};

std::string gendered(Gender g, const char* male, const char* female, const char* neutral) {
  return g == Gender::Male ? male : g == Gender::Female ? female : neutral;
}

}  // namespace

const std::vector<RelationWord>& vocabulary() {
  static const std::vector<RelationWord> v = build();
  return v;
}

const RelationWord* find_word(std::string_view text) {
  const std::string key = canonical_key(text);
  for (const auto& w : vocabulary()) {
    if (w.key == key) return &w;
  }
  return nullptr;
}

std::string_view kind_name(RelationKind k) {
  return kKindNames.at(static_cast<std::size_t>(k));
}

RelationKind parse_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == s) return static_cast<RelationKind>(i);
  }
  throw InvalidArgument("unknown relation kind '" + std::string(s) + "'");
}

std::string_view side_name(Side s) {
  switch (s) {
    case Side::Paternal: return "paternal";
    case Side::Maternal: return "maternal";
    default: return "unknown";
  }
}

std::string relation_name(const CanonicalRelation& r) {
  const Gender g = r.gender;
  std::string side;
  if (r.side != Side::Unknown) side = std::string(side_name(r.side)) + " ";
  switch (r.kind) {
    case RelationKind::Self: return "self";
    case RelationKind::Parent: return gendered(g, "father", "mother", "parent");
    case RelationKind::Grandparent:
      return side + gendered(g, "grandfather", "grandmother", "grandparent");
    case RelationKind::GreatGrandparent:
      return side + gendered(g, "great-grandfather", "great-grandmother",
                             "great-grandparent");
    case RelationKind::Child: return gendered(g, "son", "daughter", "child");
    case RelationKind::Grandchild:
      return gendered(g, "grandson", "granddaughter", "grandchild");
    case RelationKind::GreatGrandchild:
      return gendered(g, "great-grandson", "great-granddaughter", "great-grandchild");
    case RelationKind::Sibling: return gendered(g, "brother", "sister", "sibling");
    case RelationKind::ParentSibling:
      return side + gendered(g, "uncle", "aunt", "parent's sibling");
    case RelationKind::SiblingChild: return gendered(g, "nephew", "niece", "sibling's child");
    case RelationKind::Cousin:
      return side + gendered(g, "cousin brother", "cousin sister", "cousin");
    case RelationKind::Spouse: return gendered(g, "husband", "wife", "spouse");
    case RelationKind::ParentInLaw:
      return gendered(g, "father-in-law", "mother-in-law", "parent-in-law");
    case RelationKind::ChildInLaw:
      return gendered(g, "son-in-law", "daughter-in-law", "child-in-law");
    case RelationKind::SiblingInLaw:
      return gendered(g, "brother-in-law", "sister-in-law", "sibling-in-law");
    case RelationKind::GrandchildInLaw:
      return gendered(g, "grandson-in-law", "granddaughter-in-law", "grandchild-in-law");
  }
  return "?";
}

bool subsumes(const CanonicalRelation& general, const CanonicalRelation& specific) {
  return general.kind == specific.kind &&
         (general.gender == Gender::Unknown || general.gender == specific.gender) &&
         (general.side == Side::Unknown || general.side == specific.side);
}

}  // namespace logobf::kin
