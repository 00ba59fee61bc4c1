#include <gtest/gtest.h>

#include "helpers.hpp"
#include "illtp/proof_io.hpp"

using namespace illtp;
using illtp::testing::seq;

namespace {

bool same_tree(const ProofTree& a, const ProofTree& b) {
  if (a.rule != b.rule || !(a.conclusion == b.conclusion) || a.premises.size() != b.premises.size())
    return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!same_tree(a.premises[i], b.premises[i])) return false;
  return true;
}

TEST(ProofIO, RoundTripStillChecks) {
  for (const Sequent& s : {seq({"a -o b", "b -o c"}, "a -o c"),
                           seq({"!(!a -o b)", "!(!b -o c)"}, "!a -o c"),
                           seq({"a", "b"}, "(a * top) & (b * top)"),
                           seq({"bot"}, nullptr)}) {
    ProveResult r = prove(s);
    ASSERT_TRUE(r.proof) << to_unicode(s);
    std::string text = write_proof_json({"demo", s, *r.proof});
    ProofDocument doc = read_proof_json(text);
    EXPECT_EQ(doc.problem, "demo");
    EXPECT_TRUE(doc.sequent == s);
    EXPECT_TRUE(same_tree(doc.proof, *r.proof));
    EXPECT_TRUE(check_proof(doc.proof, doc.sequent));
  }
}

TEST(ProofIO, Malformed) {
  EXPECT_THROW(read_proof_json("{"), FormatError);
  EXPECT_THROW(read_proof_json("{\"format\": \"other\"}"), FormatError);
  Sequent s = seq({}, "a -o a");
  std::string text = write_proof_json({"x", s, *prove(s).proof});
  std::string bad_rule = text;
  bad_rule.replace(bad_rule.find("\"rule\": \"") + 9, 1, "Q");
  EXPECT_THROW(read_proof_json(bad_rule), FormatError);
  std::string bad_formula = text;
  bad_formula.replace(bad_formula.find("a -o a"), 6, "a -o ");
  EXPECT_THROW(read_proof_json(bad_formula), FormatError);
}

}  // namespace
