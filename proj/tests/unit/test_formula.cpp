#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "illtp/formula.hpp"
#include "oracles.hpp"

using namespace illtp;
using illtp::testing::f;

namespace {

const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");

TEST(Polarity, Examples) {
  EXPECT_EQ(polarity(Formula::tensor(a, b)), Polarity::Positive);
  EXPECT_EQ(polarity(Formula::with(a, b)), Polarity::Negative);
  EXPECT_EQ(polarity(Formula::atom("p")), Polarity::Positive);
}

TEST(Polarity, DualPairsHaveOppositePolarity) {
  const std::pair<Formula, Formula> duals[] = {
      {Formula::tensor(a, b), Formula::par(a, b)},
      {Formula::plus(a, b), Formula::with(a, b)},
      {Formula::one(), Formula::bot()},
      {Formula::zero(), Formula::top()},
      {Formula::bang(a), Formula::quest(a)},
  };
  for (const auto& [pos, neg] : duals) {
    EXPECT_EQ(polarity(pos), Polarity::Positive) << to_unicode(pos);
    EXPECT_EQ(polarity(neg), Polarity::Negative) << to_unicode(neg);
  }
  EXPECT_EQ(polarity(Formula::limp(a, b)), Polarity::Negative);
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(Formula::atom("p")), Formula::limp(Formula::atom("p"), Formula::bot()));
  EXPECT_EQ(negate(Formula::bot()), Formula::limp(Formula::bot(), Formula::bot()));
  Formula ab = Formula::limp(a, b);
  EXPECT_EQ(negate(ab), Formula::limp(ab, Formula::bot()));
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_ill_admissible(Formula::bang(Formula::limp(a, b))));
  EXPECT_FALSE(is_ill_admissible(Formula::par(a, b)));
  EXPECT_FALSE(is_ill_admissible(Formula::limp(Formula::quest(a), b)));
}

TEST(HashConsing, StructuralEqualityIsIdentity) {
  Formula x = Formula::tensor(Formula::atom("a"), Formula::bang(Formula::atom("b")));
  Formula y = Formula::tensor(Formula::atom("a"), Formula::bang(Formula::atom("b")));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.id(), y.id());
  // No commutativity or associativity.
  EXPECT_NE(Formula::tensor(a, b), Formula::tensor(b, a));
  EXPECT_EQ(structural_compare(x, y), std::strong_ordering::equal);
  EXPECT_NE(structural_compare(Formula::tensor(a, b), Formula::tensor(b, a)),
            std::strong_ordering::equal);
}

TEST(Atoms, AreCaseSensitive) {
  EXPECT_NE(Formula::atom("a"), Formula::atom("A"));
}

TEST(Sequent, EqualityIsMultisetOnTheLeft) {
  Sequent s1{{a, b, a}, b};
  Sequent s2{{b, a, a}, b};
  Sequent s3{{a, b}, b};
  EXPECT_TRUE(s1 == s2);
  EXPECT_FALSE(s1 == s3);
}

TEST(ExpandDefined, Examples) {
  ILFormula A = ILFormula::atom("a");
  ILFormula B = ILFormula::atom("b");
  EXPECT_EQ(expand_defined(ILFormula::equiv(A, B)),
            ILFormula::conj(ILFormula::imp(A, B), ILFormula::imp(B, A)));
  EXPECT_EQ(expand_defined(ILFormula::neg(A)), ILFormula::imp(A, ILFormula::falsity()));
  EXPECT_EQ(expand_defined(A), A);
}

bool has_defined(ILFormula g) {
  switch (g.kind()) {
    case ILConnective::Not:
    case ILConnective::Equiv:
      return true;
    case ILConnective::And:
    case ILConnective::Or:
    case ILConnective::Imp:
      return has_defined(g.left()) || has_defined(g.right());
    default:
      return false;
  }
}

void atoms_of(ILFormula g, std::vector<std::string>& out) {
  switch (g.kind()) {
    case ILConnective::Atom:
      out.push_back(g.name());
      return;
    case ILConnective::Not:
      atoms_of(g.body(), out);
      return;
    case ILConnective::And:
    case ILConnective::Or:
    case ILConnective::Imp:
    case ILConnective::Equiv:
      atoms_of(g.left(), out);
      atoms_of(g.right(), out);
      return;
    default:
      return;
  }
}

TEST(ExpandDefined, IdempotentAndKeepsAtoms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    ILFormula g = illtp::testing::random_il_formula(rng, 5);
    ILFormula e = expand_defined(g);
    EXPECT_FALSE(has_defined(e)) << to_string(g);
    EXPECT_EQ(expand_defined(e), e) << to_string(g);
    // Equiv duplicates its operands, so compare the atom sets, and the
    // multisets when no Equiv occurs.
    std::vector<std::string> before, after;
    atoms_of(g, before);
    atoms_of(e, after);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (to_string(g).find("<=>") == std::string::npos) {
      EXPECT_EQ(before, after) << to_string(g);
    } else {
      before.erase(std::unique(before.begin(), before.end()), before.end());
      after.erase(std::unique(after.begin(), after.end()), after.end());
      EXPECT_EQ(before, after) << to_string(g);
    }
  }
}

TEST(Printing, UnicodeAndText) {
  EXPECT_EQ(to_unicode(f("!a -o b")), "!a ⊸ b");
  EXPECT_EQ(to_string(Formula::bang(Formula::with(a, b))), "!(a & b)");
  EXPECT_EQ(to_string(f("a -o b -o c")), "a -o b -o c");
  EXPECT_EQ(to_string(f("(a -o b) -o c")), "(a -o b) -o c");
}

TEST(Printing, Latex) {
  EXPECT_EQ(to_latex(f("!a -o b")), "{!}a \\multimap b");
  EXPECT_EQ(to_latex(Formula::atom("x_1")), "x\\_1");
}

}  // namespace
