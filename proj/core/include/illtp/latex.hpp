#pragma once

#include <string>
#include <string_view>

#include "illtp/focused.hpp"

namespace illtp {

/// Inference-style rendering for proof.sty's \infer. Each maximal run of
/// negative-phase rules becomes a single ★ step, the decide and release
/// rules DL2, DR, RL and RR are left implicit, and the classical context is
/// printed in blue. A focused formula is shown in the linear context (left
/// focus) or as the succedent (right focus).
std::string render_latex_proof(const ProofTree& pt);

/// Θ ; Γ ⊢ Δ with Θ in blue.
std::string render_latex_state(const FocusedState& st);

/// Standalone document around `body` (math content), with the packages and
/// macros the renderers rely on.
std::string latex_document(std::string_view body);

}  // namespace illtp
