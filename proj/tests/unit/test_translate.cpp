#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "illtp/problem.hpp"
#include "illtp/translate.hpp"
#include "oracles.hpp"

using namespace illtp;
using illtp::testing::f;

namespace {

ILFormula il(const char* text) { return expand_defined(parse_il_formula(text)); }

TEST(Mult, Examples) {
  EXPECT_EQ(trans_mult(il("a => b")), f("a -o b"));
  EXPECT_EQ(trans_mult(il("~a")), f("a -o bot"));
  EXPECT_EQ(trans_mult(il("a & $true")), f("a * 1"));
  EXPECT_EQ(trans_mult(il("a | $false")), f("a | bot"));
}

TEST(CallByName, Examples) {
  EXPECT_EQ(trans_cbn(il("a => b")), f("!a -o b"));
  EXPECT_EQ(trans_cbn(il("a & b")), f("a & b"));
  EXPECT_EQ(trans_cbn(il("a | b")), f("!a + !b"));
  EXPECT_EQ(trans_cbn(il("$true")), f("top"));
  EXPECT_EQ(trans_cbn(il("~a")), f("!a -o 0"));
}

TEST(CallByValue, Examples) {
  EXPECT_EQ(trans_cbv(il("p")), f("!p"));
  EXPECT_EQ(trans_cbv(il("a => b")), f("!(!a -o !b)"));
  EXPECT_EQ(trans_cbv(il("$false")), f("0"));
  EXPECT_EQ(trans_cbv(il("a & b | $true")), f("!a * !b + 1"));
}

TEST(ZeroOne, Examples) {
  EXPECT_EQ(trans_01(il("a => b"), Side::Left), f("!a -o !b"));
  EXPECT_EQ(trans_01(il("a & b"), Side::Left), f("!a & !b"));
  EXPECT_EQ(trans_01(il("$true"), Side::Right), f("1"));
  EXPECT_EQ(trans_01(il("$true"), Side::Left), f("top"));
  EXPECT_EQ(trans_01(il("a => b"), Side::Right), f("!(!a -o b)"));
  EXPECT_EQ(trans_01(il("a & b"), Side::Right), f("!(a & b)"));
}

ILSequent il_seq(std::initializer_list<const char*> lhs, const char* rhs) {
  ILSequent s{{}, parse_il_formula(rhs)};
  for (const char* a : lhs) s.antecedent.push_back(parse_il_formula(a));
  return s;
}

TEST(Sequents, TransitivityShapes) {
  ILSequent s = il_seq({"a => b", "b => c"}, "a => c");
  EXPECT_TRUE(trans_sequent(s, TranslationKind::Mult) ==
              illtp::testing::seq({"a -o b", "b -o c"}, "a -o c"));
  EXPECT_TRUE(trans_sequent(s, TranslationKind::CallByName) ==
              illtp::testing::seq({"!(!a -o b)", "!(!b -o c)"}, "!a -o c"));
  EXPECT_TRUE(trans_sequent(s, TranslationKind::CallByValue) ==
              illtp::testing::seq({"!(!a -o !b)", "!(!b -o !c)"}, "!(!a -o !c)"));
}

TEST(Sequents, ZeroOneIdentity) {
  EXPECT_TRUE(trans_sequent(il_seq({}, "a => a"), TranslationKind::ZeroOne) ==
              illtp::testing::seq({}, "!(!a -o a)"));
}

TEST(Sequents, WrapsAntecedentsInOneBang) {
  ILSequent s = il_seq({"a", "a & b"}, "b");
  for (TranslationKind k : {TranslationKind::CallByName, TranslationKind::ZeroOne}) {
    Sequent t = trans_sequent(s, k);
    ASSERT_EQ(t.antecedent.size(), 2u);
    for (Formula g : t.antecedent) EXPECT_TRUE(g.is(Connective::Bang)) << to_unicode(g);
  }
  Sequent m = trans_sequent(s, TranslationKind::Mult);
  EXPECT_EQ(m.antecedent[0], f("a"));
}

TEST(Tags, RoundTrip) {
  for (TranslationKind k : kAllTranslations) EXPECT_EQ(parse_translation_kind(tag(k)), k);
  EXPECT_FALSE(parse_translation_kind("girard"));
}

bool has_or(ILFormula g) {
  switch (g.kind()) {
    case ILConnective::Or:
      return true;
    case ILConnective::Not:
      return has_or(g.body());
    case ILConnective::And:
    case ILConnective::Imp:
    case ILConnective::Equiv:
      return has_or(g.left()) || has_or(g.right());
    default:
      return false;
  }
}

TEST(Admissibility, ExponentialTranslationsAlwaysAdmissible) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    ILFormula g = illtp::testing::random_il_formula(rng, 5);
    ILFormula e = expand_defined(g);
    EXPECT_TRUE(is_ill_admissible(trans_cbn(e))) << to_string(g);
    EXPECT_TRUE(is_ill_admissible(trans_cbv(e))) << to_string(g);
    EXPECT_TRUE(is_ill_admissible(trans_01(e, Side::Left))) << to_string(g);
    EXPECT_TRUE(is_ill_admissible(trans_01(e, Side::Right))) << to_string(g);
    EXPECT_EQ(is_ill_admissible(trans_mult(e)), !has_or(g)) << to_string(g);
    EXPECT_EQ(bang_count(trans_mult(e)), 0u);
  }
}

}  // namespace
