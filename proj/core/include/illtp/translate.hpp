#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "illtp/formula.hpp"

namespace illtp {

/// The four embeddings of intuitionistic logic into linear logic.
enum class TranslationKind {
  Mult,         ///< connective-for-connective multiplicative image, no exponentials
  CallByName,   ///< Girard's translation, (A→B) ↦ !A ⊸ B
  CallByValue,  ///< Girard's positive translation, atoms become !p
  ZeroOne,      ///< polarity-indexed 0/1 translation
};

inline constexpr TranslationKind kAllTranslations[] = {
    TranslationKind::Mult, TranslationKind::CallByName, TranslationKind::CallByValue,
    TranslationKind::ZeroOne};

/// Short tags used in file names and reports: mult, cbn, cbv, 01.
std::string_view tag(TranslationKind k);
std::optional<TranslationKind> parse_translation_kind(std::string_view text);

/// Side of the turnstile for the 0/1 translation.
enum class Side { Left = 0, Right = 1 };

Formula trans_mult(ILFormula f);
Formula trans_cbn(ILFormula f);
Formula trans_cbv(ILFormula f);
Formula trans_01(ILFormula f, Side side);

Formula translate(ILFormula f, TranslationKind k);

/// Sequent-level wrappings: Γ^m ⊢ A^m, !Γ^g ⊢ A^g, Γ^p ⊢ A^p and !Γ^0 ⊢ A^1.
/// Defined connectives are expanded first.
Sequent trans_sequent(const ILSequent& s, TranslationKind k);

}  // namespace illtp
