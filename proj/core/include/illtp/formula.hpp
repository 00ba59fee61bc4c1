#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace illtp {

enum class Connective : std::uint8_t {
  Atom,
  One,
  Zero,
  Top,
  Bot,
  Tensor,
  Par,
  With,
  Plus,
  Limp,
  Bang,
  Quest,
};

enum class Polarity : std::uint8_t { Positive, Negative };

namespace detail {
struct FormulaNode;
struct ILFormulaNode;
class FormulaTable;
class ILFormulaTable;
}  // namespace detail

/// A propositional linear logic formula.
///
/// Formulas are hash-consed: two structurally equal formulas share one node,
/// so equality and hashing are pointer operations. Nodes are immutable and
/// live for the lifetime of the process, which makes handles cheap to copy
/// and safe to share between threads.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula one();
  static Formula zero();
  static Formula top();
  static Formula bot();
  static Formula tensor(Formula lhs, Formula rhs);
  static Formula par(Formula lhs, Formula rhs);
  static Formula with(Formula lhs, Formula rhs);
  static Formula plus(Formula lhs, Formula rhs);
  static Formula limp(Formula lhs, Formula rhs);
  static Formula bang(Formula body);
  static Formula quest(Formula body);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_binary() const;
  bool is_unary() const;

  /// Atom name; empty for every other connective.
  const std::string& name() const;
  /// Left operand of a binary connective, or the operand of ! and ?.
  Formula left() const;
  Formula right() const;
  Formula body() const { return left(); }

  /// Number of connective and atom occurrences.
  std::size_t size() const;
  /// Interning id; stable within a process, not across processes.
  std::uint32_t id() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

 private:
  explicit Formula(const detail::FormulaNode* node) : node_(node) {}
  friend class detail::FormulaTable;
  const detail::FormulaNode* node_;
};

/// Total structural order (connective, then atom name, then operands).
/// Independent of interning order, so it is reproducible across runs.
std::strong_ordering structural_compare(Formula a, Formula b);

struct FormulaIdLess {
  bool operator()(Formula a, Formula b) const { return a.id() < b.id(); }
};

Polarity polarity(Formula f);
inline bool is_positive(Formula f) { return polarity(f) == Polarity::Positive; }
inline bool is_negative(Formula f) { return polarity(f) == Polarity::Negative; }

/// F^⊥, defined as F ⊸ ⊥ for every F.
Formula negate(Formula f);

/// True iff the formula contains neither ⅋ nor ?.
bool is_ill_admissible(Formula f);

/// Number of ! occurrences.
std::size_t bang_count(Formula f);

/// Atom names in left-to-right occurrence order (with repetitions).
std::vector<std::string> atom_occurrences(Formula f);

/// ILLTP concrete syntax with minimal parentheses. See problem.hpp for the grammar.
std::string to_string(Formula f);
/// Unicode rendering for diagnostics, e.g. "!A ⊸ B".
std::string to_unicode(Formula f);
/// LaTeX math; expects \with and \parr to be defined (see latex.hpp).
std::string to_latex(Formula f);

/// A two-sided ILL sequent Γ ⊢ Δ with at most one succedent formula.
struct Sequent {
  std::vector<Formula> antecedent;
  std::optional<Formula> succedent;
};

/// Multiset equality of antecedents plus equality of succedents.
bool operator==(const Sequent& a, const Sequent& b);
std::string to_unicode(const Sequent& s);

/// Multiset comparison helper shared by the checker and tests.
bool same_multiset(std::vector<Formula> a, std::vector<Formula> b);

// ---------------------------------------------------------------------------
// Intuitionistic source language.

enum class ILConnective : std::uint8_t { Atom, True, False, And, Or, Imp, Not, Equiv };

class ILFormula {
 public:
  static ILFormula atom(std::string_view name);
  static ILFormula truth();
  static ILFormula falsity();
  static ILFormula conj(ILFormula lhs, ILFormula rhs);
  static ILFormula disj(ILFormula lhs, ILFormula rhs);
  static ILFormula imp(ILFormula lhs, ILFormula rhs);
  static ILFormula neg(ILFormula body);
  static ILFormula equiv(ILFormula lhs, ILFormula rhs);

  ILConnective kind() const;
  bool is(ILConnective c) const { return kind() == c; }
  const std::string& name() const;
  ILFormula left() const;
  ILFormula right() const;
  ILFormula body() const { return left(); }
  std::size_t size() const;
  std::uint32_t id() const;

  friend bool operator==(ILFormula a, ILFormula b) { return a.node_ == b.node_; }

 private:
  explicit ILFormula(const detail::ILFormulaNode* node) : node_(node) {}
  friend class detail::ILFormulaTable;
  const detail::ILFormulaNode* node_;
};

std::strong_ordering structural_compare(ILFormula a, ILFormula b);

/// Replaces A ∼ B by (A → B) ∧ (B → A) and ¬A by A → f, recursively.
ILFormula expand_defined(ILFormula f);

/// Rudimentary means free of ∨.
bool is_rudimentary(ILFormula f);

/// TPTP-style text: ~ & | => <=> $true $false.
std::string to_string(ILFormula f);
std::string to_unicode(ILFormula f);

struct ILSequent {
  std::vector<ILFormula> antecedent;
  ILFormula succedent;
};

bool operator==(const ILSequent& a, const ILSequent& b);
std::string to_unicode(const ILSequent& s);

}  // namespace illtp

template <>
struct std::hash<illtp::Formula> {
  std::size_t operator()(illtp::Formula f) const noexcept { return f.id(); }
};

template <>
struct std::hash<illtp::ILFormula> {
  std::size_t operator()(illtp::ILFormula f) const noexcept { return f.id(); }
};
