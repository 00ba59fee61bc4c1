#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "illtp/formula.hpp"

namespace illtp {

/// Derivation in the contraction-free calculus G4ip. Rule names:
/// Ax, fL, tR, tL, andL, orL, impR, andR, orR1, orR2, atomImpL, tImpL,
/// fImpL, andImpL, orImpL, impImpL.
struct ILProofTree {
  std::string rule;
  ILSequent sequent;
  std::vector<ILProofTree> premises;
};

struct ILProofResult {
  bool provable = false;
  std::optional<ILProofTree> proof;  // set iff provable
  std::uint64_t nodes = 0;           // search nodes visited
};

class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ILLimits {
  std::uint64_t node_budget = 50'000'000;
};

/// Decides intuitionistic provability. ¬ and ∼ are expanded first, so the
/// proof's root sequent is the expanded one. Throws ResourceExceeded if the
/// node budget runs out.
ILProofResult prove_il(const ILSequent& s, const ILLimits& limits = {});

/// Independent local check of every G4ip inference. The root must match
/// the expansion of `s` (antecedents compared as sets).
bool check_il_proof(const ILProofTree& proof, const ILSequent& s);

std::size_t proof_size(const ILProofTree& proof);

}  // namespace illtp
