#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "illtp/formula.hpp"

// ILLTP problem files.
//
//   file    := clause*
//   clause  := "fof(" name "," role "," formula ")."
//   role    := "axiom" | "conjecture"
//   formula := atom | "1" | "0" | "top" | "bot" | "!" formula | "?" formula
//            | formula op formula | "(" formula ")"
//
// Binary operators from tightest to loosest: *, &, +, |, -o. All are
// left-associative except -o, which associates to the right. Comments run
// from % to end of line; /* */ blocks are skipped. Header comments before the
// first clause are kept, and "% Problem : <name>" and "% Status : <value>"
// lines are interpreted.

namespace illtp {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public FormatError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateConjecture : public FormatError {
 public:
  explicit DuplicateConjecture(std::size_t line);
};

enum class ProblemStatus { Theorem, NonTheorem, Unknown };

std::string_view to_string(ProblemStatus s);
std::optional<ProblemStatus> parse_status(std::string_view text);

/// Header comment lines (text after the %) with "Key : value" lookup.
class HeaderComments {
 public:
  std::vector<std::string> lines;

  std::optional<std::string> value(std::string_view key) const;
  void set(std::string_view key, std::string_view value);
  void erase(std::string_view key);

  ProblemStatus status() const;
  void set_status(ProblemStatus s) { set("Status", to_string(s)); }

  bool operator==(const HeaderComments&) const = default;
};

struct LabeledFormula {
  std::string label;
  Formula formula;
  bool operator==(const LabeledFormula&) const = default;
};

struct Problem {
  std::string name;
  std::vector<LabeledFormula> axioms;
  LabeledFormula conjecture;
  HeaderComments header;

  ProblemStatus status() const { return header.status(); }
};

/// Structural equality ignoring comments.
bool same_problem(const Problem& a, const Problem& b);

Sequent to_sequent(const Problem& p);

Problem parse_problem(std::string_view text);
std::string serialize_problem(const Problem& p);

Formula parse_formula(std::string_view text);

// ---------------------------------------------------------------------------
// Intuitionistic problems in the propositional TPTP/ILTP fof syntax:
// ~ & | => <= <=> <~> ~& ~| $true $false. Roles axiom, hypothesis, lemma,
// definition and assumption become antecedents.

struct LabeledILFormula {
  std::string label;
  ILFormula formula;
  bool operator==(const LabeledILFormula&) const = default;
};

struct ILProblem {
  std::string name;
  std::vector<LabeledILFormula> axioms;
  LabeledILFormula conjecture;
  HeaderComments header;
};

ILSequent to_sequent(const ILProblem& p);

ILProblem parse_il_problem(std::string_view text);
std::string serialize_il_problem(const ILProblem& p);

ILFormula parse_il_formula(std::string_view text);

/// True for identifiers usable as atoms: [a-zA-Z][a-zA-Z0-9_]* minus the
/// reserved words top and bot.
bool is_valid_atom_name(std::string_view name);

}  // namespace illtp
