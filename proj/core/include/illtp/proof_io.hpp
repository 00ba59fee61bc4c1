#pragma once

#include <string>
#include <string_view>

#include "illtp/focused.hpp"
#include "illtp/problem.hpp"

namespace illtp {

/// A proof together with the sequent it proves, as exchanged in JSON files.
///
///   {"format": "illtp-proof", "version": 1, "problem": "...",
///    "sequent": {"antecedent": ["a -o b", ...], "succedent": "b"},
///    "proof": {"rule": "⊸R", "state": {...}, "premises": [...]}}
///
/// States are {"theta": [...], "gamma": [...], "mode": "neg"|"right"|"left",
/// "focus": "...", "delta": "..."}; formulas use the problem-file syntax.
struct ProofDocument {
  std::string problem;
  Sequent sequent;
  ProofTree proof;
};

std::string write_proof_json(const ProofDocument& doc);

/// Throws FormatError on malformed JSON, unknown rules or bad formulas.
ProofDocument read_proof_json(std::string_view text);

}  // namespace illtp
