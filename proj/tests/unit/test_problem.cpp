#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "illtp/kleene.hpp"
#include "illtp/problem.hpp"
#include "oracles.hpp"

using namespace illtp;
using illtp::testing::f;

namespace {

TEST(ParseProblem, SingleConjecture) {
  Problem p = parse_problem("fof(k1, conjecture, a -o a).");
  EXPECT_TRUE(p.axioms.empty());
  EXPECT_EQ(p.conjecture.label, "k1");
  EXPECT_EQ(p.conjecture.formula, Formula::limp(Formula::atom("a"), Formula::atom("a")));
}

TEST(ParseProblem, AxiomsBecomeAntecedents) {
  Problem p = parse_problem("fof(h, axiom, a * (a -o bot)). fof(g, conjecture, b).");
  Sequent s = to_sequent(p);
  ASSERT_EQ(s.antecedent.size(), 1u);
  EXPECT_EQ(s.antecedent[0], f("a * (a -o bot)"));
  EXPECT_EQ(s.succedent, f("b"));
}

TEST(ParseProblem, MissingOperandIsSyntaxError) {
  EXPECT_THROW(parse_problem("fof(x, conjecture, a -o )."), SyntaxError);
}

TEST(ParseProblem, SyntaxErrorCarriesPosition) {
  try {
    parse_problem("% header\nfof(x, conjecture,\n  a * * b).");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(ParseProblem, DuplicateConjecture) {
  EXPECT_THROW(parse_problem("fof(a, conjecture, a). fof(b, conjecture, b)."),
               DuplicateConjecture);
}

TEST(ParseProblem, MissingPeriodOrConjecture) {
  EXPECT_THROW(parse_problem("fof(a, conjecture, a)"), SyntaxError);
  EXPECT_THROW(parse_problem("fof(a, axiom, a)."), FormatError);
  EXPECT_THROW(parse_problem("fof(a, lemma, a)."), FormatError);
}

TEST(ParseProblem, CommentsAndHeader) {
  Problem p = parse_problem(
      "% Problem : demo\n% Status : Non-Theorem\n\n"
      "fof(h1, axiom, ! a). % trailing\n"
      "/* block */ fof(c, conjecture, a * a).\n");
  EXPECT_EQ(p.name, "demo");
  EXPECT_EQ(p.status(), ProblemStatus::NonTheorem);
  ASSERT_EQ(p.axioms.size(), 1u);
  EXPECT_EQ(p.axioms[0].formula, Formula::bang(Formula::atom("a")));
}

TEST(ParseFormula, PrecedenceAndAssociativity) {
  Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  EXPECT_EQ(f("a * b & c"), Formula::with(Formula::tensor(a, b), c));
  EXPECT_EQ(f("a & b + c"), Formula::plus(Formula::with(a, b), c));
  EXPECT_EQ(f("a + b | c"), Formula::par(Formula::plus(a, b), c));
  EXPECT_EQ(f("a | b -o c"), Formula::limp(Formula::par(a, b), c));
  EXPECT_EQ(f("a -o b -o c"), Formula::limp(a, Formula::limp(b, c)));
  EXPECT_EQ(f("a * b * c"), Formula::tensor(Formula::tensor(a, b), c));
  EXPECT_EQ(f("!a * b"), Formula::tensor(Formula::bang(a), b));
  EXPECT_EQ(f("? ! a"), Formula::quest(Formula::bang(a)));
  EXPECT_EQ(f("1 * 0 & top + bot"),
            Formula::plus(Formula::with(Formula::tensor(Formula::one(), Formula::zero()),
                                        Formula::top()),
                          Formula::bot()));
}

TEST(Serialize, CanonicalConjecture) {
  Problem p{"", {}, {"c", f("a -o a")}, {}};
  EXPECT_EQ(serialize_problem(p), "fof(c, conjecture, (a -o a)).\n");
}

TEST(Serialize, BangOverWithIsParenthesised) {
  EXPECT_EQ(to_string(Formula::bang(Formula::with(Formula::atom("a"), Formula::atom("b")))),
            "!(a & b)");
}

TEST(RoundTrip, GeneratedLibrary) {
  auto lib = generate_library(kleene_corpus(), kAllTranslations);
  ASSERT_EQ(lib.size(), 271u);
  for (const Problem& p : lib) {
    Problem q = parse_problem(serialize_problem(p));
    EXPECT_TRUE(same_problem(p, q)) << p.name;
    EXPECT_EQ(p.status(), q.status()) << p.name;
  }
}

TEST(RoundTrip, RandomFormulasToDepthEight) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Formula g = illtp::testing::random_any_formula(rng, 8);
    EXPECT_EQ(parse_formula(to_string(g)), g) << to_string(g);
    Problem p{"", {{"h", g}}, {"c", g}, {}};
    EXPECT_TRUE(same_problem(parse_problem(serialize_problem(p)), p));
  }
}

TEST(Serialize, AdmissibleFormulasNeverUseParOrQuest) {
  std::mt19937_64 rng(99);
  illtp::testing::FormulaShape shape{6, 3, true, true};
  for (int i = 0; i < 500; ++i) {
    Formula g = illtp::testing::random_formula(rng, shape);
    ASSERT_TRUE(is_ill_admissible(g));
    std::string text = to_string(g);
    EXPECT_EQ(text.find('|'), std::string::npos) << text;
    EXPECT_EQ(text.find('?'), std::string::npos) << text;
  }
}

TEST(Header, SetAndQuery) {
  HeaderComments h;
  h.set("Status", "Theorem");
  h.set("Source", "x : y");
  EXPECT_EQ(h.status(), ProblemStatus::Theorem);
  h.set_status(ProblemStatus::NonTheorem);
  EXPECT_EQ(h.value("Status"), "Non-Theorem");
  EXPECT_EQ(h.lines.size(), 2u);
  h.erase("Status");
  EXPECT_EQ(h.status(), ProblemStatus::Unknown);
}

TEST(AtomNames, Validity) {
  EXPECT_TRUE(is_valid_atom_name("a"));
  EXPECT_TRUE(is_valid_atom_name("Place_3"));
  EXPECT_FALSE(is_valid_atom_name("3p"));
  EXPECT_FALSE(is_valid_atom_name("_p"));
  EXPECT_FALSE(is_valid_atom_name("top"));
  EXPECT_FALSE(is_valid_atom_name("a-b"));
}

TEST(ILProblem, ParsesIltpSyntax) {
  ILProblem p = parse_il_problem(
      "% Status   : Theorem\n"
      "fof(ax1, axiom, (a => b)).\n"
      "fof(ax2, hypothesis, ~ (b & $false)).\n"
      "fof(con, conjecture, (a | c) <=> ~~a).\n");
  ASSERT_EQ(p.axioms.size(), 2u);
  EXPECT_EQ(p.header.status(), ProblemStatus::Theorem);
  ILSequent s = to_sequent(p);
  EXPECT_EQ(s.succedent.kind(), ILConnective::Equiv);
  ILProblem q = parse_il_problem(serialize_il_problem(p));
  EXPECT_TRUE(to_sequent(q) == s);
}

TEST(ILProblem, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    ILFormula g = illtp::testing::random_il_formula(rng, 6);
    EXPECT_EQ(parse_il_formula(to_string(g)), g) << to_string(g);
  }
}

}  // namespace
