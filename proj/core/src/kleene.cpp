#include "illtp/kleene.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string_view>

namespace illtp {
namespace {

struct RawEntry {
  int index;
  std::initializer_list<std::string_view> antecedent;
  std::string_view succedent;
};

// Kleene's list restricted to (→, ∧), with ~ for negation and <=> for
// bi-implication. Atoms keep the upper-case names used in the literature.
const RawEntry kRawEntries[] = {
    {1, {}, "A => A"},
    {2, {"A => B", "B => C"}, "A => C"},
    {3, {"A => (B => C)"}, "B => (A => C)"},
    {4, {"A => (B => C)"}, "(A & B) => C"},
    {5, {"(A & B) => C"}, "A => (B => C)"},
    {6, {"A => B"}, "(B => C) => (A => C)"},
    {7, {"A => B"}, "(C => A) => (C => B)"},
    {8, {"A => B"}, "(A & C) => (B & C)"},
    {9, {"A => B"}, "(C & A) => (C & B)"},
    {10, {"~A"}, "A => B"},
    {11, {"A"}, "~A => B"},
    {12, {"B"}, "A => B"},
    {13, {"A => B"}, "~B => ~A"},
    {14, {"A => ~B"}, "~~B => ~A"},
    {15, {"A => B", "B => A"}, "A <=> B"},
    {16, {"A <=> B"}, "A => B"},
    {17, {"A <=> B"}, "B => A"},
    {18, {"A <=> B", "A"}, "B"},
    {19, {"A <=> B", "B"}, "A"},
    {20, {}, "A <=> A"},
    {21, {"A <=> B"}, "B <=> A"},
    {22, {"A <=> B", "B <=> C"}, "A <=> C"},
    {23, {"A => (B => C)", "~~A", "~~B"}, "~~C"},
    {24, {"~~(A => B)"}, "~~A => ~~B"},
    {25, {"~~(A => B)", "~~(B => C)"}, "~~(A => C)"},
    {26, {}, "~~(A & B) <=> (~~A & ~~B)"},
    {27, {}, "~~(A <=> B) <=> (~~(A => B) & ~~(B => A))"},
    {28, {"A <=> B"}, "(A => C) <=> (B => C)"},
    {29, {"A <=> B"}, "(C => A) <=> (C => B)"},
    {30, {"A <=> B"}, "(A & C) <=> (B & C)"},
    {31, {"A <=> B"}, "(C & A) <=> (C & B)"},
    {32, {"A <=> B"}, "~A <=> ~B"},
    {33, {}, "((A & B) & C) <=> (A & (B & C))"},
    {34, {}, "(A & B) <=> (B & A)"},
    {35, {}, "(A & A) <=> A"},
    {36, {"A"}, "(A => B) <=> B"},
    {37, {"B"}, "(A => B) <=> B"},
    {38, {"~A"}, "(A => B) <=> ~A"},
    {39, {"~B"}, "(A => B) <=> ~A"},
    {40, {"B"}, "(A & B) <=> A"},
    {41, {"~B"}, "(A & B) <=> B"},
    {42, {}, "A => ~~A"},
    {43, {}, "~~~A <=> ~A"},
    {44, {}, "~(A & ~A)"},
    {45, {}, "~(A <=> ~A)"},
    {46, {}, "~~(~~A => A)"},
    {47, {}, "(A & (B & ~B)) <=> (B & ~B)"},
    {48, {}, "(A => B) => ~(A & ~B)"},
    {49, {}, "(A => ~B) <=> ~(A & B)"},
    {50, {}, "~(A & B) <=> (~~A => ~B)"},
    {51, {"~~B => B"}, "(~~A => B) <=> (A => B)"},
    {52, {"~~B => B"}, "(A => B) <=> ~(A & ~B)"},
    {53, {}, "(~~A => B) => ~(A & ~B)"},
    {54, {}, "(A & B) => ~(A => ~B)"},
    {55, {}, "(A & ~B) => ~(A => B)"},
    {56, {}, "(~~A & B) => ~(A => ~B)"},
    {57, {}, "(~~A & ~B) <=> ~(A => B)"},
    {58, {}, "~(A => B) <=> ~~(A & ~B)"},
    {59, {}, "~~(A => B) <=> ~(A & ~B)"},
    {60, {}, "~(A & ~B) <=> (A => ~~B)"},
    {61, {}, "(A => ~~B) <=> (~~A => ~~B)"},
};

// Entries whose multiplicative image is not provable.
constexpr std::array<int, 22> kMultNonTheorems{10, 11, 12, 16, 17, 18, 19, 26, 27, 35, 36,
                                               37, 38, 39, 40, 41, 45, 46, 47, 57, 58, 59};

using F = Formula;

const F A = F::atom("A");
const F B = F::atom("B");

F limp(F a, F b) { return F::limp(a, b); }
F tensor(F a, F b) { return F::tensor(a, b); }
F with(F a, F b) { return F::with(a, b); }
F bang(F a) { return F::bang(a); }
F perp(F a) { return negate(a); }
F perp2(F a) { return perp(perp(a)); }
F zero() { return F::zero(); }
// A ⊸⊸ B, the multiplicative bi-implication (A ⊸ B) ⊗ (B ⊸ A).
F biimp(F a, F b) { return tensor(limp(a, b), limp(b, a)); }

Sequent seq(std::initializer_list<F> lhs, F rhs) { return Sequent{lhs, rhs}; }

std::vector<std::pair<int, AlternativeSequent>> alternative_sequents() {
  return {
      {10, {"", seq({limp(A, zero())}, limp(A, B))}},
      {11, {"", seq({A}, limp(limp(A, zero()), B))}},
      {12, {"", seq({B}, limp(bang(A), B))}},
      {16, {"", seq({tensor(limp(A, B), bang(limp(B, A)))}, limp(A, B))}},
      {17, {"", seq({tensor(bang(limp(A, B)), limp(B, A))}, limp(B, A))}},
      {18, {"", seq({biimp(A, B), A}, tensor(B, limp(B, A)))}},
      {19, {"", seq({biimp(A, B), B}, tensor(A, limp(A, B)))}},
      {26, {"a", seq({}, limp(perp2(with(A, B)), with(perp2(A), perp2(B))))}},
      {26, {"b", seq({}, limp(tensor(perp2(A), perp2(B)), perp2(tensor(A, B))))}},
      {27,
       {"a", seq({}, limp(perp2(tensor(bang(limp(A, B)), bang(limp(B, A)))),
                          with(perp2(limp(A, B)), perp2(limp(B, A)))))}},
      {27,
       {"b", seq({}, limp(tensor(perp2(limp(A, B)), perp2(limp(B, A))), perp2(biimp(A, B))))}},
      {35, {"", seq({}, biimp(tensor(bang(A), bang(A)), bang(A)))}},
      {36, {"", seq({A}, tensor(limp(limp(A, B), B), limp(B, limp(bang(A), B))))}},
      {37, {"", seq({B}, tensor(limp(bang(limp(A, B)), B), limp(B, limp(bang(A), B))))}},
      {38,
       {"", seq({perp(A)}, tensor(limp(bang(limp(A, B)), perp(A)),
                                  limp(limp(A, zero()), limp(A, B))))}},
      {39, {"", seq({limp(B, zero())}, biimp(limp(A, B), limp(A, zero())))}},
      {40, {"", seq({B}, tensor(limp(tensor(A, bang(B)), A), limp(A, tensor(A, B))))}},
      {41,
       {"", seq({limp(B, zero())}, tensor(limp(tensor(bang(A), B), B), limp(B, tensor(A, B))))}},
      {45, {"", seq({}, perp(tensor(bang(limp(A, perp(A))), limp(perp(bang(A)), bang(A)))))}},
      {46, {"", seq({}, perp(bang(perp(limp(bang(limp(perp(A), zero())), A)))))}},
      {47,
       {"", seq({}, biimp(tensor(A, tensor(B, limp(B, zero()))), tensor(B, limp(B, zero()))))}},
      {57, {"a", seq({}, limp(tensor(perp2(A), perp(B)), perp(limp(A, B))))}},
      {57, {"b", seq({}, limp(perp(limp(bang(A), B)), with(perp(limp(A, zero())), perp(B))))}},
      {58,
       {"a", seq({}, limp(bang(perp(limp(bang(A), B))), perp(limp(tensor(A, perp(B)), zero()))))}},
      {58, {"b", seq({}, limp(perp2(tensor(A, perp(B))), perp(limp(A, B))))}},
      {59, {"a", seq({}, limp(perp2(limp(A, B)), perp(tensor(A, perp(B)))))}},
      {59,
       {"b", seq({}, limp(limp(tensor(A, perp(B)), zero()), perp(bang(perp(limp(bang(A), B))))))}},
  };
}

std::vector<KleeneEntry> build_corpus() {
  std::vector<KleeneEntry> corpus;
  corpus.reserve(std::size(kRawEntries));
  for (const RawEntry& raw : kRawEntries) {
    ILSequent s{{}, parse_il_formula(raw.succedent)};
    for (std::string_view a : raw.antecedent) s.antecedent.push_back(parse_il_formula(a));
    bool fails = std::find(kMultNonTheorems.begin(), kMultNonTheorems.end(), raw.index) !=
                 kMultNonTheorems.end();
    corpus.push_back(KleeneEntry{raw.index, std::move(s),
                                 fails ? ProblemStatus::NonTheorem : ProblemStatus::Theorem,
                                 {}});
  }
  for (auto& [index, alt] : alternative_sequents())
    corpus.at(static_cast<std::size_t>(index - 1)).alternatives.push_back(std::move(alt));
  return corpus;
}

}  // namespace

const std::vector<KleeneEntry>& kleene_corpus() {
  static const std::vector<KleeneEntry> corpus = build_corpus();
  return corpus;
}

Problem make_problem(std::string name, const Sequent& s) {
  if (!s.succedent) throw std::invalid_argument("problem files need a conjecture");
  Problem p{std::move(name), {}, {"c", *s.succedent}, {}};
  for (std::size_t i = 0; i < s.antecedent.size(); ++i)
    p.axioms.push_back({"h" + std::to_string(i + 1), s.antecedent[i]});
  return p;
}

std::vector<Problem> generate_library(std::span<const KleeneEntry> corpus,
                                      std::span<const TranslationKind> kinds) {
  std::vector<Problem> out;
  for (const KleeneEntry& e : corpus) {
    for (TranslationKind k : kinds) {
      std::string name = "KLE-" + std::to_string(e.index) + "-" + std::string(tag(k));
      Problem p = make_problem(name, trans_sequent(e.sequent, k));
      p.header.set("Source", "Kleene " + std::to_string(e.index) + ": " + to_unicode(e.sequent));
      p.header.set("Translation", tag(k));
      p.header.set_status(k == TranslationKind::Mult ? e.mult_status : ProblemStatus::Theorem);
      out.push_back(std::move(p));
    }
  }
  for (const KleeneEntry& e : corpus) {
    for (const AlternativeSequent& alt : e.alternatives) {
      std::string name = "KLE-" + std::to_string(e.index) + "-alt" + alt.part;
      Problem p = make_problem(name, alt.sequent);
      p.header.set("Source", "Kleene " + std::to_string(e.index) + ": " + to_unicode(e.sequent));
      p.header.set("Translation", "alt");
      p.header.set_status(ProblemStatus::Theorem);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<ILProblem> kleene_il_problems(std::span<const KleeneEntry> corpus) {
  std::vector<ILProblem> out;
  for (const KleeneEntry& e : corpus) {
    ILProblem p{"KLE-" + std::to_string(e.index) + "-il", {}, {"c", e.sequent.succedent}, {}};
    for (std::size_t i = 0; i < e.sequent.antecedent.size(); ++i)
      p.axioms.push_back({"h" + std::to_string(i + 1), e.sequent.antecedent[i]});
    p.header.set("Source", "Kleene " + std::to_string(e.index));
    p.header.set_status(ProblemStatus::Theorem);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace illtp
