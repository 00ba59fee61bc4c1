#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "illtp/formula.hpp"

namespace illtp {

/// Inference rules of the focused calculus ILLF. `Sat` is the derived
/// classical-context rewriting step (see saturate_classical).
enum class Rule : std::uint8_t {
  TensorL, LimpR, OneL, BotR, TopR, ZeroL, BangL, WithR, PlusL,
  TensorR, LimpL, PlusR1, PlusR2, WithL1, WithL2, OneR, BotL, BangR, IR,
  DL1, DL2, DR, RL, RR,
  Sat,
};

/// Rule names as printed in proofs, e.g. "⊗L", "DL1", "IR".
std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);
/// Number of premises the rule takes.
std::size_t rule_arity(Rule r);
bool is_negative_rule(Rule r);

enum class GoalMode : std::uint8_t { Neg, RightFocus, LeftFocus };

/// Θ : Γ → Δ (Neg), Θ : Γ ⇓ F (RightFocus) or Θ : Γ —F→ Δ (LeftFocus).
/// Θ is kept as a set sorted by structural order; Γ as a sorted multiset.
struct FocusedState {
  std::vector<Formula> theta;
  std::vector<Formula> gamma;
  GoalMode mode = GoalMode::Neg;
  std::optional<Formula> focus;  // RightFocus/LeftFocus only
  std::optional<Formula> delta;  // Neg/LeftFocus only

  static FocusedState neg(std::vector<Formula> theta, std::vector<Formula> gamma,
                          std::optional<Formula> delta);
  static FocusedState right_focus(std::vector<Formula> theta, std::vector<Formula> gamma,
                                  Formula focus);
  static FocusedState left_focus(std::vector<Formula> theta, std::vector<Formula> gamma,
                                 Formula focus, std::optional<Formula> delta);

  /// Sorts Θ (removing duplicates) and Γ into canonical order.
  void canonicalize();
  bool operator==(const FocusedState& o) const;
};

/// The state a sequent Γ ⊢ Δ is embedded as: · : Γ → Δ.
FocusedState initial_state(const Sequent& s);

/// Normal means: Neg mode, Γ holds only atoms and negative formulas, and Δ
/// is absent, atomic or positive.
bool is_normal(const FocusedState& st);

std::string to_unicode(const FocusedState& st);

struct ProofTree {
  Rule rule = Rule::IR;
  FocusedState conclusion;
  std::vector<ProofTree> premises;
};

std::size_t proof_size(const ProofTree& pt);

enum class DecideOrder : std::uint8_t {
  LinearFirst,     // DL2, DR, DL1
  RightFirst,      // DR, DL2, DL1
  ClassicalFirst,  // DL1, DL2, DR
};

struct SearchLimits {
  /// Wall-clock budget; zero disables it.
  std::chrono::milliseconds timeout{300'000};
  /// Maximum number of decide steps on any branch.
  std::uint32_t max_depth = 10'000;
  /// Maximum DL1 steps on one classical formula along a branch.
  std::uint32_t decide_bound = 4;
  /// Deterministic budget on the total number of decide steps; zero disables it.
  std::uint64_t node_budget = 0;
  /// Rewrite Θ with saturate_classical at every normal state.
  bool saturate = true;
  /// Cut branches that revisit a normal state of one of their ancestors.
  bool loop_check = true;
  /// Try decide bounds 1, 2, 4, ... up to decide_bound instead of only the final one.
  bool iterative_deepening = true;
  DecideOrder order = DecideOrder::LinearFirst;
  /// Cooperative cancellation, polled at every decide step.
  std::stop_token stop;
};

enum class Verdict : std::uint8_t { Provable, NotProvable, Unknown };
/// BoundHit: the search space was exhausted only up to the decide bound.
/// ParseError and Unsupported are set by callers that never reach the prover.
enum class UnknownReason : std::uint8_t { None, Timeout, BoundHit, ParseError, Unsupported };

std::string_view to_string(Verdict v);
std::string_view to_string(UnknownReason r);

struct ProveResult {
  Verdict verdict = Verdict::Unknown;
  UnknownReason reason = UnknownReason::None;
  std::optional<ProofTree> proof;
  double elapsed_ms = 0;
  std::uint64_t decides = 0;

  bool provable() const { return verdict == Verdict::Provable; }
};

class NonAdmissibleFormula : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Focused proof search for Γ ⊢ Δ. Throws NonAdmissibleFormula on ⅋ or ?.
ProveResult prove(const Sequent& s, const SearchLimits& limits = {});

/// Proof search from an arbitrary focused state (any goal mode). The linear
/// context must be consumed exactly.
ProveResult prove_state(const FocusedState& st, const SearchLimits& limits = {});

/// Same as prove_state on a focused state; kept as the entry point for the
/// positive phase.
ProveResult positive_phase(const FocusedState& st, const SearchLimits& limits = {});

/// Applies the invertible rules exhaustively and returns the normal states
/// left open. Branches closed by ⊤R or 0L produce nothing.
std::vector<FocusedState> negative_phase(const FocusedState& st);

/// Every decide step available in a normal state. `uses` counts earlier DL1
/// steps per Θ formula on this branch; formulas at `bound` are skipped.
std::vector<std::pair<Rule, FocusedState>> decide(
    const FocusedState& st, const std::vector<std::pair<Formula, std::uint32_t>>& uses = {},
    std::uint32_t bound = 4);

/// Fixpoint of: replace P1 & P2 (both positive) by P1 and P2; add B when
/// A ⊸ B is present and A is an atom of the set or !p with p in the set.
std::vector<Formula> saturate_classical(std::vector<Formula> theta);

/// Checks every node of the proof against its rule schema and the root
/// against the embedding of `s`.
bool check_proof(const ProofTree& pt, const Sequent& s);
/// Checks the tree alone, with `root` as the required conclusion.
bool check_proof(const ProofTree& pt, const FocusedState& root);

}  // namespace illtp
