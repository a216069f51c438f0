#include <gtest/gtest.h>

#include <algorithm>

#include "logobf/common/rng.hpp"
#include "logobf/fol/parser.hpp"
#include "logobf/fol/random_formula.hpp"
#include "logobf/fol/render.hpp"
#include "logobf/obfuscator/equivalence.hpp"
#include "logobf/obfuscator/obfuscate.hpp"
#include "logobf/obfuscator/rewrite.hpp"

namespace logobf::obf {
namespace {

using fol::parse_formula;

bool has_site(const std::vector<Site>& sites, RuleId id, const Path& pos,
              Direction d = Direction::Forward) {
  return std::find(sites.begin(), sites.end(), Site{{id, d}, pos}) != sites.end();
}

TEST(Rewrite, QuantifierDualityAtRoot) {
  const auto f = parse_formula("forall x. P(x)");
  EXPECT_EQ(apply_rewrite({RuleId::QuantifierDuality}, f, {}),
            parse_formula("~(exists x. ~P(x))"));
}

TEST(Rewrite, DoubleNegationIntroduction) {
  EXPECT_EQ(apply_rewrite({RuleId::DoubleNegation, Direction::Backward}, parse_formula("P()"), {}),
            parse_formula("~~P()"));
}

TEST(Rewrite, ContrapositionUnderQuantifier) {
  const auto f = parse_formula("forall x. (Human(x) -> Mammal(x))");
  EXPECT_EQ(apply_rewrite({RuleId::Contraposition}, f, {0}),
            parse_formula("forall x. (~Mammal(x) -> ~Human(x))"));
}

TEST(Rewrite, NotApplicableAndBadPosition) {
  const auto f = parse_formula("P() & Q()");
  EXPECT_THROW(apply_rewrite({RuleId::Contraposition}, f, {}), RuleNotApplicable);
  EXPECT_THROW(apply_rewrite({RuleId::DoubleNegation, Direction::Backward}, f, {5}),
               fol::InvalidPosition);
}

TEST(Rewrite, TautologyInjectUsesWitness) {
  const auto f = parse_formula("P(a)");
  const auto q = parse_formula("Q(a)");
  EXPECT_EQ(apply_rewrite({RuleId::TautologyInject}, f, {}, q),
            parse_formula("P(a) & (Q(a) | ~Q(a))"));
}

TEST(Rewrite, RuleNamesRoundTrip) {
  for (const auto& r : full_catalog()) {
    EXPECT_EQ(parse_rule_id(rule_name(r.id)), r.id);
    EXPECT_EQ(parse_direction(direction_name(r.direction)), r.direction);
  }
}

TEST(Enumerate, DeMorganOnNegatedConjunction) {
  const auto sites = enumerate_applicable(parse_formula("~(P() & Q())"), full_catalog());
  EXPECT_TRUE(has_site(sites, RuleId::DeMorganAnd, {}));
}

TEST(Enumerate, AtomSites) {
  const auto sites = enumerate_applicable(parse_formula("P()"), full_catalog());
  EXPECT_TRUE(has_site(sites, RuleId::DoubleNegation, {}, Direction::Backward));
  EXPECT_TRUE(has_site(sites, RuleId::TautologyInject, {}));
  for (const auto& s : sites) EXPECT_NE(s.rule.id, RuleId::Contraposition);
}

TEST(Enumerate, ImplicationSites) {
  const auto sites = enumerate_applicable(parse_formula("P() -> Q()"), full_catalog());
  EXPECT_TRUE(has_site(sites, RuleId::ImplToDisj, {}));
  EXPECT_TRUE(has_site(sites, RuleId::Contraposition, {}));
  EXPECT_TRUE(has_site(sites, RuleId::ImplAsConj, {}));
}

TEST(Enumerate, Deterministic) {
  const auto f = parse_formula("forall x. (A(x) -> ~(B(x) | C(x)))");
  EXPECT_EQ(enumerate_applicable(f, full_catalog()), enumerate_applicable(f, full_catalog()));
}

TEST(Equivalence, MaterialImplication) {
  const auto v = check_equivalence(parse_formula("P() -> Q()"), parse_formula("~P() | Q()"));
  EXPECT_EQ(v.kind, EquivVerdict::Kind::PropositionallyEquivalent);
}

TEST(Equivalence, ConverseHasCounterModel) {
  const auto f = parse_formula("P() -> Q()");
  const auto g = parse_formula("Q() -> P()");
  const auto v = check_equivalence(f, g);
  ASSERT_EQ(v.kind, EquivVerdict::Kind::CounterModel);
  ASSERT_TRUE(v.counter_model.has_value());
  // The counter-model really separates the two formulas.
  EXPECT_NE(evaluate(f, *v.counter_model), evaluate(g, *v.counter_model));
  EXPECT_EQ(evaluate(f, *v.counter_model), v.f_value);
}

TEST(Equivalence, QuantifierDualityUpToThree) {
  const auto v = check_equivalence(parse_formula("forall x. P(x)"),
                                   parse_formula("~(exists x. ~P(x))"), {3});
  EXPECT_EQ(v.kind, EquivVerdict::Kind::EquivalentUpTo);
  EXPECT_EQ(v.max_domain, 3u);
}

TEST(Equivalence, FirstOrderCounterModel) {
  const auto f = parse_formula("exists x. forall y. R(x, y)");
  const auto g = parse_formula("forall y. exists x. R(x, y)");
  const auto v = check_equivalence(f, g);
  ASSERT_EQ(v.kind, EquivVerdict::Kind::CounterModel);
  EXPECT_EQ(v.counter_model->domain_size, 2u);
  EXPECT_NE(evaluate(f, *v.counter_model), evaluate(g, *v.counter_model));
}

TEST(Equivalence, SignatureMismatch) {
  EXPECT_THROW(check_equivalence(parse_formula("P(a)"), parse_formula("P(a, a)")),
               SignatureMismatch);
}

TEST(Equivalence, BudgetExceeded) {
  const auto f = parse_formula("forall x. forall y. (R(x, y) | S(x, y) | T(x, y))");
  try {
    check_equivalence(f, f, {3, 1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_LT(e.largest_completed_domain(), 3u);
  }
}

TEST(Equivalence, Symmetric) {
  SeededRng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto f = fol::random_formula(rng, {.max_depth = 3});
    const auto g = fol::random_formula(rng, {.max_depth = 3});
    if (fol::predicate_signature(f) != fol::predicate_signature(g)) continue;
    EXPECT_EQ(check_equivalence(f, g).kind, check_equivalence(g, f).kind);
  }
}

// Every catalog rule, applied at every site of random formulas, stays
// equivalent over domains 1..3.
class RuleSoundness : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RuleSoundness, NoCounterModels) {
  const RewriteRule rule = full_catalog().at(GetParam());
  SeededRng rng(1000 + GetParam());
  std::size_t applied = 0;
  for (int i = 0; i < 400 && applied < 150; ++i) {
    const auto base = fol::random_formula(rng);
    const auto witnesses = fol::atoms(base);
    // Backward patterns are rare in random formulas; one forward step of any
    // rule produces them.
    std::vector<fol::Formula> inputs{base};
    for (const auto& other : full_catalog()) {
      const auto sites = enumerate_applicable(base, {other});
      if (sites.empty()) continue;
      std::optional<fol::Formula> w;
      if (other.id == RuleId::TautologyInject) w = witnesses[rng.index(witnesses.size())];
      inputs.push_back(apply_rewrite(other, base, sites[rng.index(sites.size())].position, w));
    }
    for (const auto& f : inputs) {
      for (const auto& site : enumerate_applicable(f, {rule})) {
        std::optional<fol::Formula> w;
        if (rule.id == RuleId::TautologyInject) w = witnesses[rng.index(witnesses.size())];
        const auto g = apply_rewrite(rule, f, site.position, w);
        const auto v = check_equivalence(f, g, {3});
        ASSERT_TRUE(v.equivalent()) << rule_name(rule.id) << " at " << fol::render_formula(f, fol::Style::Ascii);
        ++applied;
      }
    }
  }
  EXPECT_GT(applied, 0u) << rule_name(rule.id) << " never applied";
}

INSTANTIATE_TEST_SUITE_P(Catalog, RuleSoundness,
                         ::testing::Range<std::size_t>(0, full_catalog().size()),
                         [](const auto& info) {
                           const auto r = full_catalog()[info.param];
                           std::string n{rule_name(r.id)};
                           n += r.direction == Direction::Forward ? "_fwd" : "_bwd";
                           std::replace_if(n.begin(), n.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)) && c != '_'; }, '_');
                           return n;
                         });

fol::Problem human_mammal() {
  fol::Problem p;
  p.premises = {parse_formula("forall x. (Human(x) -> Mammal(x))"),
                parse_formula("Human(socrates)")};
  p.conclusion = parse_formula("Mammal(socrates)");
  p.label = fol::Label::True;
  return p;
}

TEST(Obfuscate, MinRulesAndVerified) {
  const auto p = human_mammal();
  const auto r = obfuscate_premises(p, 42, 4);
  ASSERT_EQ(r.traces.size(), p.premises.size());
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    EXPECT_GE(r.traces[i].steps.size(), 4u);
    EXPECT_TRUE(check_equivalence(p.premises[i], r.problem.premises[i], {3}).equivalent());
  }
}

TEST(Obfuscate, ConclusionAndLabelUntouched) {
  const auto p = human_mammal();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = obfuscate_premises(p, seed, 4);
    EXPECT_EQ(r.problem.conclusion, p.conclusion);
    EXPECT_EQ(r.problem.label, p.label);
  }
}

TEST(Obfuscate, TraceReplays) {
  const auto p = human_mammal();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = obfuscate_premises(p, seed, 5);
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      EXPECT_EQ(replay(p.premises[i], r.traces[i]), r.problem.premises[i]);
    }
  }
}

TEST(Obfuscate, Deterministic) {
  const auto p = human_mammal();
  const auto a = obfuscate_premises(p, 7, 4);
  const auto b = obfuscate_premises(p, 7, 4);
  EXPECT_EQ(a.problem, b.problem);
  for (std::size_t i = 0; i < a.problem.premises.size(); ++i) {
    EXPECT_EQ(fol::render_formula(a.problem.premises[i], fol::Style::Ascii),
              fol::render_formula(b.problem.premises[i], fol::Style::Ascii));
  }
}

TEST(Obfuscate, ForcedDoubleNegation) {
  ObfuscationOptions opts;
  opts.min_rules = 1;
  opts.catalog = {{RuleId::DoubleNegation, Direction::Backward}};
  const auto f = parse_formula("Human(socrates)");  // single site: the root
  SeededRng rng(3);
  const auto [g, trace] = obfuscate_formula(f, rng, opts, {});
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(g, fol::neg(fol::neg(f)));
  EXPECT_EQ(replay(f, trace), g);
}

TEST(Obfuscate, ZeroMinRulesRejected) {
  ObfuscationOptions opts;
  opts.min_rules = 0;
  SeededRng rng(1);
  EXPECT_THROW(obfuscate_formula(parse_formula("P()"), rng, opts, {}), InvalidArgument);
}

TEST(Obfuscate, SizeCapHolds) {
  const auto f = parse_formula("P(a)");
  fol::Problem p{{f}, parse_formula("P(a)"), fol::Label::True};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = obfuscate_premises(p, seed, 8);
    // The cap never drops below room for two nodes per required step.
    const std::size_t cap = std::max(ObfuscationOptions{}.growth_cap * f.size(), f.size() + 2 * 8);
    EXPECT_LE(r.problem.premises[0].size(), cap);
  }
}

}  // namespace
}  // namespace logobf::obf
