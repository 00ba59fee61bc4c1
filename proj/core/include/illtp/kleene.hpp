#pragma once

#include <span>
#include <string>
#include <vector>

#include "illtp/formula.hpp"
#include "illtp/problem.hpp"
#include "illtp/translate.hpp"

namespace illtp {

/// One hand-written linear alternative for an entry whose multiplicative
/// image is not provable. Entries with two alternatives label them "a"/"b".
struct AlternativeSequent {
  std::string part;
  Sequent sequent;
};

struct KleeneEntry {
  int index;  // 1..61
  ILSequent sequent;
  ProblemStatus mult_status;
  std::vector<AlternativeSequent> alternatives;
};

/// The 61 intuitionistic theorems of the rudimentary fragment, with the
/// provability status of their multiplicative images and the linear
/// alternatives for the 22 that fail.
const std::vector<KleeneEntry>& kleene_corpus();

/// Problems named KLE-<index>-<kind> (one per entry and kind) followed by
/// KLE-<index>-alt<part> (one per alternative sequent). Only multiplicative
/// images of non-provable entries get Status Non-Theorem.
std::vector<Problem> generate_library(std::span<const KleeneEntry> corpus,
                                      std::span<const TranslationKind> kinds);

/// The intuitionistic source of each entry as an ILTP-syntax problem, named KLE-<index>-il.
std::vector<ILProblem> kleene_il_problems(std::span<const KleeneEntry> corpus);

/// Builds a problem from a sequent with labels h1..hn for axioms and "c" for the conjecture.
Problem make_problem(std::string name, const Sequent& s);

}  // namespace illtp
