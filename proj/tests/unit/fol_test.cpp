#include <gtest/gtest.h>

#include <set>

#include "logobf/common/rng.hpp"
#include "logobf/fol/formula.hpp"
#include "logobf/fol/parser.hpp"
#include "logobf/fol/random_formula.hpp"
#include "logobf/fol/render.hpp"

namespace logobf::fol {
namespace {

Formula P(const char* name, std::vector<Term> args = {}) { return pred(name, std::move(args)); }
Term v(const char* n) { return Term::variable(n); }

TEST(Parser, HumanMammal) {
  const Formula f = parse_formula("forall x. (Human(x) -> Mammal(x))");
  EXPECT_EQ(f, forall("x", implies(P("Human", {v("x")}), P("Mammal", {v("x")}))));
}

TEST(Parser, NullaryConnectives) {
  EXPECT_EQ(parse_formula("P() & ~P()"), conj(P("P"), neg(P("P"))));
}

TEST(Parser, NestedQuantifiersKeepOrder) {
  EXPECT_EQ(parse_formula("forall x. forall y. P(x,y)"),
            forall("x", forall("y", P("P", {v("x"), v("y")}))));
}

TEST(Parser, Precedence) {
  // ~ > & > | > -> > <->, with -> right-associative.
  EXPECT_EQ(parse_formula("~A() & B() | C()"), disj(conj(neg(P("A")), P("B")), P("C")));
  EXPECT_EQ(parse_formula("A() -> B() -> C()"), implies(P("A"), implies(P("B"), P("C"))));
  EXPECT_EQ(parse_formula("A() | B() -> C() <-> D()"),
            iff(implies(disj(P("A"), P("B")), P("C")), P("D")));
}

TEST(Parser, WhitespaceInsensitive) {
  EXPECT_EQ(parse_formula("  forall   x .(Human( x )->Mammal(x) ) "),
            parse_formula("forall x. (Human(x) -> Mammal(x))"));
}

TEST(Parser, ConstantsAndVariables) {
  const Formula f = parse_formula("forall x. Likes(x, bonnie)");
  const auto& atom = f.body();
  ASSERT_EQ(atom.args().size(), 2u);
  EXPECT_TRUE(atom.args()[0].is_variable());
  EXPECT_FALSE(atom.args()[1].is_variable());
  EXPECT_EQ(constants(f), std::set<std::string>{"bonnie"});
}

TEST(Parser, SyntaxErrorCarriesOffset) {
  try {
    parse_formula("P() & ");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_formula("forall x P(x)"), SyntaxError);
  EXPECT_THROW(parse_formula("(P()"), SyntaxError);
}

TEST(Parser, ArityClash) {
  EXPECT_THROW(parse_formula("P(a) & P(a, b)"), ArityError);
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_formula("forall x. P(x)")), std::set<std::string>{});
  EXPECT_EQ(free_vars(P("P", {v("x")})), std::set<std::string>{"x"});
  EXPECT_EQ(free_vars(conj(forall("x", P("P", {v("x")})), P("Q", {v("y")}))),
            std::set<std::string>{"y"});
}

TEST(Render, DoubleNegationAscii) {
  EXPECT_EQ(render_formula(neg(neg(P("P"))), Style::Ascii), "~~P()");
}

TEST(Render, Prover9Formula) {
  const Formula f = parse_formula("forall x. (Human(x) -> Mammal(x))");
  EXPECT_EQ(render_formula(f, Style::Prover9), "all x (Human(x) -> Mammal(x)).");
}

TEST(Render, Prover9Constants) {
  EXPECT_EQ(render_formula(conj(top(), neg(bottom())), Style::Prover9), "$T & -$F.");
}

TEST(Render, NlTemplate) {
  const Formula f = neg(exists("x", neg(P("P", {v("x")}))));
  EXPECT_EQ(render_formula(f, Style::NlTemplate),
            "it is not the case that there exists an entity x such that it is not the case "
            "that P holds of x");
}

TEST(Render, StyleNames) {
  for (Style s : {Style::Ascii, Style::Unicode, Style::Prover9, Style::NlTemplate}) {
    EXPECT_EQ(parse_style(style_name(s)), s);
  }
}

TEST(Validate, ProblemNeedsPremise) {
  Problem p;
  p.conclusion = P("P");
  EXPECT_THROW(validate(p), WellFormednessError);
}

TEST(Validate, ArityAcrossProblem) {
  Problem p;
  p.premises = {parse_formula("P(a)")};
  p.conclusion = parse_formula("P(a, b)");
  EXPECT_THROW(validate(p), ArityError);
}

TEST(Positions, ReplaceAt) {
  const Formula f = parse_formula("forall x. (Human(x) -> Mammal(x))");
  const Formula g = replace_at(f, {0, 1}, P("Animal", {v("x")}));
  EXPECT_EQ(g, parse_formula("forall x. (Human(x) -> Animal(x))"));
  EXPECT_THROW(subformula_at(f, {0, 2}), InvalidPosition);
}

class RoundTrip : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RoundTrip, AsciiAndUnicode) {
  SeededRng rng(GetParam());
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng);
    const std::string ascii = render_formula(f, Style::Ascii);
    EXPECT_EQ(parse_formula(ascii), f) << ascii;
    EXPECT_EQ(render_formula(f, Style::Ascii), ascii);  // determinism
    EXPECT_EQ(render_formula(f, Style::Unicode), render_formula(f, Style::Unicode));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundTrip, ::testing::Values(1u, 2u, 3u, 42u, 9001u));

TEST(NlTemplate, InjectiveOnRandomFormulas) {
  SeededRng rng(77);
  std::map<std::string, std::string> seen;  // nl -> ascii
  for (int i = 0; i < 3000; ++i) {
    const Formula f = random_formula(rng, {.max_depth = 6});
    const std::string nl = render_formula(f, Style::NlTemplate);
    const std::string ascii = render_formula(f, Style::Ascii);
    const auto [it, inserted] = seen.emplace(nl, ascii);
    if (!inserted) {
      EXPECT_EQ(it->second, ascii) << nl;
    }
  }
}

}  // namespace
}  // namespace logobf::fol
