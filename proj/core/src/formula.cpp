#include "illtp/formula.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace illtp {
namespace detail {

struct FormulaNode {
  Connective kind;
  std::string name;
  const FormulaNode* lhs;
  const FormulaNode* rhs;
  std::size_t size;
  std::uint32_t id;
};

struct ILFormulaNode {
  ILConnective kind;
  std::string name;
  const ILFormulaNode* lhs;
  const ILFormulaNode* rhs;
  std::size_t size;
  std::uint32_t id;
};

namespace {

struct NodeKey {
  std::uint8_t kind;
  std::string name;
  const void* lhs;
  const void* rhs;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.name);
    h ^= std::hash<const void*>{}(k.lhs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.rhs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ k.kind;
  }
};

}  // namespace

class FormulaTable {
 public:
  static Formula make(Connective kind, std::string_view name, const FormulaNode* lhs,
                      const FormulaNode* rhs) {
    static FormulaTable table;
    return Formula(table.intern(kind, name, lhs, rhs));
  }
  static const FormulaNode* node(Formula f) { return f.node_; }

 private:
  const FormulaNode* intern(Connective kind, std::string_view name, const FormulaNode* lhs,
                            const FormulaNode* rhs) {
    NodeKey key{static_cast<std::uint8_t>(kind), std::string(name), lhs, rhs};
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    std::size_t size = 1 + (lhs ? lhs->size : 0) + (rhs ? rhs->size : 0);
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(FormulaNode{kind, std::string(name), lhs, rhs, size, id});
    const FormulaNode* node = &nodes_.back();
    index_.emplace(std::move(key), node);
    return node;
  }

  std::mutex mutex_;
  std::deque<FormulaNode> nodes_;
  std::unordered_map<NodeKey, const FormulaNode*, NodeKeyHash> index_;
};

class ILFormulaTable {
 public:
  static ILFormula make(ILConnective kind, std::string_view name, const ILFormulaNode* lhs,
                        const ILFormulaNode* rhs) {
    static ILFormulaTable table;
    return ILFormula(table.intern(kind, name, lhs, rhs));
  }
  static const ILFormulaNode* node(ILFormula f) { return f.node_; }

 private:
  const ILFormulaNode* intern(ILConnective kind, std::string_view name, const ILFormulaNode* lhs,
                              const ILFormulaNode* rhs) {
    NodeKey key{static_cast<std::uint8_t>(kind), std::string(name), lhs, rhs};
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    std::size_t size = 1 + (lhs ? lhs->size : 0) + (rhs ? rhs->size : 0);
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(ILFormulaNode{kind, std::string(name), lhs, rhs, size, id});
    const ILFormulaNode* node = &nodes_.back();
    index_.emplace(std::move(key), node);
    return node;
  }

  std::mutex mutex_;
  std::deque<ILFormulaNode> nodes_;
  std::unordered_map<NodeKey, const ILFormulaNode*, NodeKeyHash> index_;
};

}  // namespace detail

using detail::FormulaTable;
using detail::ILFormulaTable;

namespace {

const detail::FormulaNode* N(Formula f) { return FormulaTable::node(f); }
const detail::ILFormulaNode* N(ILFormula f) { return ILFormulaTable::node(f); }

}  // namespace

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("atom name must not be empty");
  return FormulaTable::make(Connective::Atom, name, nullptr, nullptr);
}
Formula Formula::one() { return FormulaTable::make(Connective::One, {}, nullptr, nullptr); }
Formula Formula::zero() { return FormulaTable::make(Connective::Zero, {}, nullptr, nullptr); }
Formula Formula::top() { return FormulaTable::make(Connective::Top, {}, nullptr, nullptr); }
Formula Formula::bot() { return FormulaTable::make(Connective::Bot, {}, nullptr, nullptr); }
Formula Formula::tensor(Formula a, Formula b) {
  return FormulaTable::make(Connective::Tensor, {}, N(a), N(b));
}
Formula Formula::par(Formula a, Formula b) {
  return FormulaTable::make(Connective::Par, {}, N(a), N(b));
}
Formula Formula::with(Formula a, Formula b) {
  return FormulaTable::make(Connective::With, {}, N(a), N(b));
}
Formula Formula::plus(Formula a, Formula b) {
  return FormulaTable::make(Connective::Plus, {}, N(a), N(b));
}
Formula Formula::limp(Formula a, Formula b) {
  return FormulaTable::make(Connective::Limp, {}, N(a), N(b));
}
Formula Formula::bang(Formula a) { return FormulaTable::make(Connective::Bang, {}, N(a), nullptr); }
Formula Formula::quest(Formula a) {
  return FormulaTable::make(Connective::Quest, {}, N(a), nullptr);
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (kind()) {
    case Connective::Tensor:
    case Connective::Par:
    case Connective::With:
    case Connective::Plus:
    case Connective::Limp:
      return true;
    default:
      return false;
  }
}

bool Formula::is_unary() const { return kind() == Connective::Bang || kind() == Connective::Quest; }

const std::string& Formula::name() const { return node_->name; }

Formula Formula::left() const {
  if (!node_->lhs) throw std::logic_error("formula has no operand");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (!node_->rhs) throw std::logic_error("formula has no right operand");
  return Formula(node_->rhs);
}

std::size_t Formula::size() const { return node_->size; }
std::uint32_t Formula::id() const { return node_->id; }

std::strong_ordering structural_compare(Formula a, Formula b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_atom()) return a.name() <=> b.name();
  if (a.is_unary()) return structural_compare(a.body(), b.body());
  if (a.is_binary()) {
    if (auto c = structural_compare(a.left(), b.left()); c != 0) return c;
    return structural_compare(a.right(), b.right());
  }
  return std::strong_ordering::equal;
}

Polarity polarity(Formula f) {
  switch (f.kind()) {
    case Connective::Par:
    case Connective::Bot:
    case Connective::With:
    case Connective::Top:
    case Connective::Quest:
    case Connective::Limp:
      return Polarity::Negative;
    case Connective::Atom:
    case Connective::Tensor:
    case Connective::One:
    case Connective::Plus:
    case Connective::Zero:
    case Connective::Bang:
      return Polarity::Positive;
  }
  return Polarity::Positive;
}

Formula negate(Formula f) { return Formula::limp(f, Formula::bot()); }

bool is_ill_admissible(Formula f) {
  if (f.is(Connective::Par) || f.is(Connective::Quest)) return false;
  if (f.is_unary()) return is_ill_admissible(f.body());
  if (f.is_binary()) return is_ill_admissible(f.left()) && is_ill_admissible(f.right());
  return true;
}

std::size_t bang_count(Formula f) {
  std::size_t own = f.is(Connective::Bang) ? 1 : 0;
  if (f.is_unary()) return own + bang_count(f.body());
  if (f.is_binary()) return bang_count(f.left()) + bang_count(f.right());
  return own;
}

namespace {

void collect_atoms(Formula f, std::vector<std::string>& out) {
  if (f.is_atom()) {
    out.push_back(f.name());
  } else if (f.is_unary()) {
    collect_atoms(f.body(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

// Binding strength, loosest first: -o, |, +, &, *, then unary, then atoms.
int precedence(Formula f) {
  switch (f.kind()) {
    case Connective::Limp:
      return 1;
    case Connective::Par:
      return 2;
    case Connective::Plus:
      return 3;
    case Connective::With:
      return 4;
    case Connective::Tensor:
      return 5;
    case Connective::Bang:
    case Connective::Quest:
      return 6;
    default:
      return 7;
  }
}

struct Symbols {
  const char* one;
  const char* zero;
  const char* top;
  const char* bot;
  const char* tensor;
  const char* par;
  const char* with;
  const char* plus;
  const char* limp;
  const char* bang;
  const char* quest;
  bool escape_underscores = false;
};

constexpr Symbols kAscii{"1", "0", "top", "bot", " * ", " | ", " & ", " + ", " -o ", "!", "?"};
constexpr Symbols kUnicode{"1", "0", "⊤", "⊥", " ⊗ ", " ⅋ ", " & ", " ⊕ ", " ⊸ ", "!", "?"};
constexpr Symbols kLatex{"\\mathbf{1}", "\\mathbf{0}", "\\top",     "\\bot",
                         " \\otimes ", " \\parr ",   " \\with ", " \\oplus ",
                         " \\multimap ", "{!}",        "{?}",       true};

void print(Formula f, const Symbols& sym, int min_prec, std::string& out) {
  const int prec = precedence(f);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Atom:
      for (char c : f.name()) {
        if (c == '_' && sym.escape_underscores) out += '\\';
        out += c;
      }
      break;
    case Connective::One:
      out += sym.one;
      break;
    case Connective::Zero:
      out += sym.zero;
      break;
    case Connective::Top:
      out += sym.top;
      break;
    case Connective::Bot:
      out += sym.bot;
      break;
    case Connective::Bang:
    case Connective::Quest:
      out += f.is(Connective::Bang) ? sym.bang : sym.quest;
      print(f.body(), sym, 6, out);
      break;
    default: {
      const char* op = sym.tensor;
      switch (f.kind()) {
        case Connective::Par:
          op = sym.par;
          break;
        case Connective::With:
          op = sym.with;
          break;
        case Connective::Plus:
          op = sym.plus;
          break;
        case Connective::Limp:
          op = sym.limp;
          break;
        default:
          break;
      }
      const bool right_assoc = f.is(Connective::Limp);
      print(f.left(), sym, right_assoc ? prec + 1 : prec, out);
      out += op;
      print(f.right(), sym, right_assoc ? prec : prec + 1, out);
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::vector<std::string> atom_occurrences(Formula f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::string to_string(Formula f) {
  std::string out;
  print(f, kAscii, 0, out);
  return out;
}

std::string to_unicode(Formula f) {
  std::string out;
  print(f, kUnicode, 0, out);
  return out;
}

std::string to_latex(Formula f) {
  std::string out;
  print(f, kLatex, 0, out);
  return out;
}

bool same_multiset(std::vector<Formula> a, std::vector<Formula> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), FormulaIdLess{});
  std::sort(b.begin(), b.end(), FormulaIdLess{});
  return a == b;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.succedent == b.succedent && same_multiset(a.antecedent, b.antecedent);
}

std::string to_unicode(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_unicode(s.antecedent[i]);
  }
  out += out.empty() ? "⊢" : " ⊢";
  if (s.succedent) out += " " + to_unicode(*s.succedent);
  return out;
}

// ---------------------------------------------------------------------------
// ILFormula

ILFormula ILFormula::atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("atom name must not be empty");
  return ILFormulaTable::make(ILConnective::Atom, name, nullptr, nullptr);
}
ILFormula ILFormula::truth() { return ILFormulaTable::make(ILConnective::True, {}, nullptr, nullptr); }
ILFormula ILFormula::falsity() {
  return ILFormulaTable::make(ILConnective::False, {}, nullptr, nullptr);
}
ILFormula ILFormula::conj(ILFormula a, ILFormula b) {
  return ILFormulaTable::make(ILConnective::And, {}, N(a), N(b));
}
ILFormula ILFormula::disj(ILFormula a, ILFormula b) {
  return ILFormulaTable::make(ILConnective::Or, {}, N(a), N(b));
}
ILFormula ILFormula::imp(ILFormula a, ILFormula b) {
  return ILFormulaTable::make(ILConnective::Imp, {}, N(a), N(b));
}
ILFormula ILFormula::neg(ILFormula a) {
  return ILFormulaTable::make(ILConnective::Not, {}, N(a), nullptr);
}
ILFormula ILFormula::equiv(ILFormula a, ILFormula b) {
  return ILFormulaTable::make(ILConnective::Equiv, {}, N(a), N(b));
}

ILConnective ILFormula::kind() const { return node_->kind; }
const std::string& ILFormula::name() const { return node_->name; }

ILFormula ILFormula::left() const {
  if (!node_->lhs) throw std::logic_error("formula has no operand");
  return ILFormula(node_->lhs);
}

ILFormula ILFormula::right() const {
  if (!node_->rhs) throw std::logic_error("formula has no right operand");
  return ILFormula(node_->rhs);
}

std::size_t ILFormula::size() const { return node_->size; }
std::uint32_t ILFormula::id() const { return node_->id; }

namespace {

bool il_binary(ILConnective k) {
  return k == ILConnective::And || k == ILConnective::Or || k == ILConnective::Imp ||
         k == ILConnective::Equiv;
}

}  // namespace

std::strong_ordering structural_compare(ILFormula a, ILFormula b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is(ILConnective::Atom)) return a.name() <=> b.name();
  if (a.is(ILConnective::Not)) return structural_compare(a.body(), b.body());
  if (il_binary(a.kind())) {
    if (auto c = structural_compare(a.left(), b.left()); c != 0) return c;
    return structural_compare(a.right(), b.right());
  }
  return std::strong_ordering::equal;
}

ILFormula expand_defined(ILFormula f) {
  switch (f.kind()) {
    case ILConnective::Atom:
    case ILConnective::True:
    case ILConnective::False:
      return f;
    case ILConnective::Not:
      return ILFormula::imp(expand_defined(f.body()), ILFormula::falsity());
    case ILConnective::Equiv: {
      ILFormula a = expand_defined(f.left());
      ILFormula b = expand_defined(f.right());
      return ILFormula::conj(ILFormula::imp(a, b), ILFormula::imp(b, a));
    }
    case ILConnective::And:
      return ILFormula::conj(expand_defined(f.left()), expand_defined(f.right()));
    case ILConnective::Or:
      return ILFormula::disj(expand_defined(f.left()), expand_defined(f.right()));
    case ILConnective::Imp:
      return ILFormula::imp(expand_defined(f.left()), expand_defined(f.right()));
  }
  return f;
}

bool is_rudimentary(ILFormula f) {
  if (f.is(ILConnective::Or)) return false;
  if (f.is(ILConnective::Not)) return is_rudimentary(f.body());
  if (il_binary(f.kind())) return is_rudimentary(f.left()) && is_rudimentary(f.right());
  return true;
}

namespace {

// ~ binds tightest, then &, then |; => and <=> are non-associative.
int il_precedence(ILFormula f) {
  switch (f.kind()) {
    case ILConnective::Imp:
    case ILConnective::Equiv:
      return 1;
    case ILConnective::Or:
      return 2;
    case ILConnective::And:
      return 3;
    case ILConnective::Not:
      return 4;
    default:
      return 5;
  }
}

void print_il(ILFormula f, bool unicode, int min_prec, std::string& out) {
  const int prec = il_precedence(f);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case ILConnective::Atom:
      out += f.name();
      break;
    case ILConnective::True:
      out += unicode ? "t" : "$true";
      break;
    case ILConnective::False:
      out += unicode ? "f" : "$false";
      break;
    case ILConnective::Not:
      out += unicode ? "¬" : "~ ";
      print_il(f.body(), unicode, 4, out);
      break;
    case ILConnective::And:
    case ILConnective::Or:
      print_il(f.left(), unicode, prec, out);
      if (f.is(ILConnective::And))
        out += unicode ? " ∧ " : " & ";
      else
        out += unicode ? " ∨ " : " | ";
      print_il(f.right(), unicode, prec + 1, out);
      break;
    case ILConnective::Imp:
    case ILConnective::Equiv:
      print_il(f.left(), unicode, prec + 1, out);
      if (f.is(ILConnective::Imp))
        out += unicode ? " → " : " => ";
      else
        out += unicode ? " ∼ " : " <=> ";
      print_il(f.right(), unicode, prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(ILFormula f) {
  std::string out;
  print_il(f, false, 0, out);
  return out;
}

std::string to_unicode(ILFormula f) {
  std::string out;
  print_il(f, true, 0, out);
  return out;
}

bool operator==(const ILSequent& a, const ILSequent& b) {
  if (!(a.succedent == b.succedent) || a.antecedent.size() != b.antecedent.size()) return false;
  auto by_id = [](ILFormula x, ILFormula y) { return x.id() < y.id(); };
  auto lhs = a.antecedent;
  auto rhs = b.antecedent;
  std::sort(lhs.begin(), lhs.end(), by_id);
  std::sort(rhs.begin(), rhs.end(), by_id);
  return lhs == rhs;
}

std::string to_unicode(const ILSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_unicode(s.antecedent[i]);
  }
  out += out.empty() ? "⊢ " : " ⊢ ";
  out += to_unicode(s.succedent);
  return out;
}

}  // namespace illtp
