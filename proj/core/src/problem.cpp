#include "illtp/problem.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <span>

namespace illtp {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : FormatError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DuplicateConjecture::DuplicateConjecture(std::size_t line)
    : FormatError("line " + std::to_string(line) + ": more than one conjecture") {}

std::string_view to_string(ProblemStatus s) {
  switch (s) {
    case ProblemStatus::Theorem:
      return "Theorem";
    case ProblemStatus::NonTheorem:
      return "Non-Theorem";
    case ProblemStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::optional<ProblemStatus> parse_status(std::string_view text) {
  if (text == "Theorem") return ProblemStatus::Theorem;
  if (text == "Non-Theorem" || text == "NonTheorem") return ProblemStatus::NonTheorem;
  if (text == "Unknown") return ProblemStatus::Unknown;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "Key : value" into its parts.
std::optional<std::pair<std::string_view, std::string_view>> split_header(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

}  // namespace

std::optional<std::string> HeaderComments::value(std::string_view key) const {
  for (const auto& line : lines) {
    if (auto kv = split_header(line); kv && kv->first == key) return std::string(kv->second);
  }
  return std::nullopt;
}

void HeaderComments::set(std::string_view key, std::string_view value) {
  std::string line = std::string(key) + " : " + std::string(value);
  for (auto& existing : lines) {
    if (auto kv = split_header(existing); kv && kv->first == key) {
      existing = std::move(line);
      return;
    }
  }
  lines.push_back(std::move(line));
}

void HeaderComments::erase(std::string_view key) {
  std::erase_if(lines, [&](const std::string& line) {
    auto kv = split_header(line);
    return kv && kv->first == key;
  });
}

ProblemStatus HeaderComments::status() const {
  if (auto v = value("Status")) {
    if (auto s = parse_status(*v)) return *s;
  }
  return ProblemStatus::Unknown;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "top" && name != "bot";
}

namespace {

enum class TokenKind { Word, Number, Quoted, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view source, std::span<const std::string_view> symbols)
      : src_(source), symbols_(symbols.begin(), symbols.end()) {
    std::sort(symbols_.begin(), symbols_.end(),
              [](std::string_view a, std::string_view b) { return a.size() > b.size(); });
  }

  const Token& peek() {
    if (!lookahead_) lookahead_ = scan();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  /// Comment lines seen before the first token.
  std::vector<std::string> take_header() { return std::move(header_); }

 private:
  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        std::size_t start = pos_ + 1;
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        if (!seen_token_) {
          std::string_view text = src_.substr(start, pos_ - start);
          if (!text.empty() && text.front() == ' ') text.remove_prefix(1);
          while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
          header_.emplace_back(text);
        }
      } else if (c == '/' && at(pos_ + 1) == '*') {
        std::size_t line = line_, col = col_;
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && at(pos_ + 1) == '/')) advance();
        if (pos_ >= src_.size()) throw SyntaxError(line, col, "unterminated block comment");
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skip_trivia();
    Token t{TokenKind::End, {}, line_, col_};
    if (pos_ >= src_.size()) return t;
    seen_token_ = true;
    char c = src_[pos_];
    std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '$' || c == '_') {
      advance();
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      t.kind = TokenKind::Word;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      t.kind = TokenKind::Number;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (c == '\'') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '\'' && src_[pos_] != '\n') advance();
      if (at(pos_) != '\'') throw SyntaxError(t.line, t.column, "unterminated quoted name");
      advance();
      t.kind = TokenKind::Quoted;
      t.text = std::string(src_.substr(start + 1, pos_ - start - 2));
      return t;
    }
    for (std::string_view sym : symbols_) {
      if (src_.substr(pos_, sym.size()) == sym) {
        for (std::size_t i = 0; i < sym.size(); ++i) advance();
        t.kind = TokenKind::Symbol;
        t.text = std::string(sym);
        return t;
      }
    }
    throw SyntaxError(t.line, t.column, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::vector<std::string_view> symbols_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  bool seen_token_ = false;
  std::optional<Token> lookahead_;
  std::vector<std::string> header_;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
  std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
  throw SyntaxError(t.line, t.column, message + ", found " + found);
}

void expect(Lexer& lex, std::string_view symbol) {
  Token t = lex.next();
  if (t.kind != TokenKind::Symbol || t.text != symbol)
    fail(t, "expected '" + std::string(symbol) + "'");
}

bool accept(Lexer& lex, std::string_view symbol) {
  const Token& t = lex.peek();
  if (t.kind == TokenKind::Symbol && t.text == symbol) {
    lex.next();
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Linear formulas.

constexpr std::array<std::string_view, 11> kLinearSymbols{"-o", "*", "&", "+", "|", "!", "?",
                                                         "(", ")", ",", "."};

struct BinaryOp {
  std::string_view symbol;
  int precedence;
  bool right_assoc;
  Formula (*make)(Formula, Formula);
};

constexpr std::array<BinaryOp, 5> kLinearOps{{
    {"-o", 1, true, &Formula::limp},
    {"|", 2, false, &Formula::par},
    {"+", 3, false, &Formula::plus},
    {"&", 4, false, &Formula::with},
    {"*", 5, false, &Formula::tensor},
}};

class LinearParser {
 public:
  explicit LinearParser(Lexer& lex) : lex_(lex) {}

  Formula formula(int min_prec = 0) {
    Formula lhs = unary();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind != TokenKind::Symbol) break;
      auto op = std::find_if(kLinearOps.begin(), kLinearOps.end(),
                             [&](const BinaryOp& o) { return o.symbol == t.text; });
      if (op == kLinearOps.end() || op->precedence < min_prec) break;
      lex_.next();
      Formula rhs = formula(op->right_assoc ? op->precedence : op->precedence + 1);
      lhs = op->make(lhs, rhs);
    }
    return lhs;
  }

 private:
  Formula unary() {
    if (accept(lex_, "!")) return Formula::bang(unary());
    if (accept(lex_, "?")) return Formula::quest(unary());
    Token t = lex_.next();
    if (t.kind == TokenKind::Symbol && t.text == "(") {
      Formula f = formula();
      expect(lex_, ")");
      return f;
    }
    if (t.kind == TokenKind::Number) {
      if (t.text == "1") return Formula::one();
      if (t.text == "0") return Formula::zero();
      fail(t, "expected 1 or 0");
    }
    if (t.kind == TokenKind::Word) {
      if (t.text == "top") return Formula::top();
      if (t.text == "bot") return Formula::bot();
      if (!is_valid_atom_name(t.text)) fail(t, "invalid atom name");
      return Formula::atom(t.text);
    }
    fail(t, "expected a formula");
  }

  Lexer& lex_;
};

// ---------------------------------------------------------------------------
// Intuitionistic formulas.

constexpr std::array<std::string_view, 15> kILSymbols{
    "<~>", "<=>", "=>", "<=", "~&", "~|", "~", "&", "|", "(", ")", ",", ".", "[", "]"};

class ILParser {
 public:
  explicit ILParser(Lexer& lex) : lex_(lex) {}

  ILFormula formula(int min_prec = 0) {
    ILFormula lhs = unary();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind != TokenKind::Symbol) break;
      int prec = 0;
      if (t.text == "&" || t.text == "~&") {
        prec = 3;
      } else if (t.text == "|" || t.text == "~|") {
        prec = 2;
      } else if (t.text == "=>" || t.text == "<=" || t.text == "<=>" || t.text == "<~>") {
        prec = 1;
      } else {
        break;
      }
      if (prec < min_prec) break;
      std::string op = lex_.next().text;
      // Implications associate to the right; conjunction and disjunction to the left.
      ILFormula rhs = formula(prec == 1 ? prec : prec + 1);
      if (op == "&") {
        lhs = ILFormula::conj(lhs, rhs);
      } else if (op == "~&") {
        lhs = ILFormula::neg(ILFormula::conj(lhs, rhs));
      } else if (op == "|") {
        lhs = ILFormula::disj(lhs, rhs);
      } else if (op == "~|") {
        lhs = ILFormula::neg(ILFormula::disj(lhs, rhs));
      } else if (op == "=>") {
        lhs = ILFormula::imp(lhs, rhs);
      } else if (op == "<=") {
        lhs = ILFormula::imp(rhs, lhs);
      } else if (op == "<=>") {
        lhs = ILFormula::equiv(lhs, rhs);
      } else {
        lhs = ILFormula::neg(ILFormula::equiv(lhs, rhs));
      }
    }
    return lhs;
  }

 private:
  ILFormula unary() {
    if (accept(lex_, "~")) return ILFormula::neg(unary());
    Token t = lex_.next();
    if (t.kind == TokenKind::Symbol && t.text == "(") {
      ILFormula f = formula();
      expect(lex_, ")");
      return f;
    }
    if (t.kind == TokenKind::Word) {
      if (t.text == "$true") return ILFormula::truth();
      if (t.text == "$false") return ILFormula::falsity();
      if (t.text.front() == '$' || !is_valid_atom_name(t.text)) fail(t, "invalid atom name");
      return ILFormula::atom(t.text);
    }
    fail(t, "expected a formula");
  }

  Lexer& lex_;
};

// ---------------------------------------------------------------------------
// Clause structure shared by both syntaxes.

std::string clause_name(Lexer& lex) {
  Token t = lex.next();
  if (t.kind == TokenKind::Word || t.kind == TokenKind::Number || t.kind == TokenKind::Quoted)
    return t.text;
  fail(t, "expected a clause name");
}

std::string name_from_header(HeaderComments& header) {
  if (auto v = header.value("Problem")) {
    header.erase("Problem");
    return *v;
  }
  if (auto v = header.value("File")) {
    auto end = v->find_first_of(" \t:");
    return v->substr(0, end);
  }
  return {};
}

enum class Role { Axiom, Conjecture };

template <class F>
struct RawClause {
  std::string label;
  Role role;
  F formula;
  std::size_t line;
};

template <class F, class ParseFormula, class ParseRole>
std::pair<std::vector<RawClause<F>>, std::vector<std::string>> parse_clauses(
    std::string_view text, std::span<const std::string_view> symbols, ParseFormula parse_formula,
    ParseRole parse_role) {
  Lexer lex(text, symbols);
  std::vector<RawClause<F>> clauses;
  for (;;) {
    const Token& head = lex.peek();
    if (head.kind == TokenKind::End) break;
    Token kw = lex.next();
    if (kw.kind != TokenKind::Word || kw.text != "fof") fail(kw, "expected 'fof'");
    expect(lex, "(");
    std::string label = clause_name(lex);
    expect(lex, ",");
    Token role_tok = lex.next();
    if (role_tok.kind != TokenKind::Word) fail(role_tok, "expected a role");
    Role role = parse_role(role_tok);
    expect(lex, ",");
    F f = parse_formula(lex);
    expect(lex, ")");
    expect(lex, ".");
    clauses.push_back(RawClause<F>{std::move(label), role, f, kw.line});
  }
  return {std::move(clauses), lex.take_header()};
}

template <class Labeled, class F>
void split_roles(const std::vector<RawClause<F>>& clauses, std::vector<Labeled>& axioms,
                 std::optional<Labeled>& conjecture) {
  for (const auto& c : clauses) {
    if (c.role == Role::Conjecture) {
      if (conjecture) throw DuplicateConjecture(c.line);
      conjecture = Labeled{c.label, c.formula};
    } else {
      axioms.push_back(Labeled{c.label, c.formula});
    }
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lex(text, kLinearSymbols);
  LinearParser parser(lex);
  Formula f = parser.formula();
  if (lex.peek().kind != TokenKind::End) fail(lex.peek(), "expected end of formula");
  return f;
}

Problem parse_problem(std::string_view text) {
  auto [clauses, header_lines] = parse_clauses<Formula>(
      text, kLinearSymbols, [](Lexer& lex) { return LinearParser(lex).formula(); },
      [](const Token& t) {
        if (t.text == "axiom") return Role::Axiom;
        if (t.text == "conjecture") return Role::Conjecture;
        fail(t, "expected role 'axiom' or 'conjecture'");
      });
  std::vector<LabeledFormula> axioms;
  std::optional<LabeledFormula> conjecture;
  split_roles(clauses, axioms, conjecture);
  if (!conjecture) throw SyntaxError(1, 1, "problem has no conjecture");
  HeaderComments header{std::move(header_lines)};
  std::string name = name_from_header(header);
  return Problem{std::move(name), std::move(axioms), std::move(*conjecture), std::move(header)};
}

namespace {

std::string clause_text(const std::string& label, std::string_view role, std::string body,
                        bool binary) {
  if (binary) body = "(" + body + ")";
  return "fof(" + label + ", " + std::string(role) + ", " + body + ").\n";
}

std::string header_text(const std::string& name, const HeaderComments& header) {
  std::string out;
  if (!name.empty()) out += "% Problem : " + name + "\n";
  for (const auto& line : header.lines) {
    if (auto kv = split_header(line); kv && kv->first == "Problem") continue;
    out += line.empty() ? "%\n" : "% " + line + "\n";
  }
  return out;
}

}  // namespace

std::string serialize_problem(const Problem& p) {
  std::string out = header_text(p.name, p.header);
  for (const auto& ax : p.axioms)
    out += clause_text(ax.label, "axiom", to_string(ax.formula), ax.formula.is_binary());
  out += clause_text(p.conjecture.label, "conjecture", to_string(p.conjecture.formula),
                     p.conjecture.formula.is_binary());
  return out;
}

bool same_problem(const Problem& a, const Problem& b) {
  return a.name == b.name && a.axioms == b.axioms && a.conjecture == b.conjecture;
}

Sequent to_sequent(const Problem& p) {
  Sequent s;
  for (const auto& ax : p.axioms) s.antecedent.push_back(ax.formula);
  s.succedent = p.conjecture.formula;
  return s;
}

ILFormula parse_il_formula(std::string_view text) {
  Lexer lex(text, kILSymbols);
  ILParser parser(lex);
  ILFormula f = parser.formula();
  if (lex.peek().kind != TokenKind::End) fail(lex.peek(), "expected end of formula");
  return f;
}

ILProblem parse_il_problem(std::string_view text) {
  auto [clauses, header_lines] = parse_clauses<ILFormula>(
      text, kILSymbols, [](Lexer& lex) { return ILParser(lex).formula(); },
      [](const Token& t) {
        if (t.text == "conjecture") return Role::Conjecture;
        if (t.text == "axiom" || t.text == "hypothesis" || t.text == "lemma" ||
            t.text == "definition" || t.text == "assumption")
          return Role::Axiom;
        fail(t, "unsupported role");
      });
  std::vector<LabeledILFormula> axioms;
  std::optional<LabeledILFormula> conjecture;
  split_roles(clauses, axioms, conjecture);
  if (!conjecture) throw SyntaxError(1, 1, "problem has no conjecture");
  HeaderComments header{std::move(header_lines)};
  std::string name = name_from_header(header);
  return ILProblem{std::move(name), std::move(axioms), std::move(*conjecture), std::move(header)};
}

std::string serialize_il_problem(const ILProblem& p) {
  auto binary = [](ILFormula f) {
    return !f.is(ILConnective::Atom) && !f.is(ILConnective::True) &&
           !f.is(ILConnective::False) && !f.is(ILConnective::Not);
  };
  std::string out = header_text(p.name, p.header);
  for (const auto& ax : p.axioms)
    out += clause_text(ax.label, "axiom", to_string(ax.formula), binary(ax.formula));
  out += clause_text(p.conjecture.label, "conjecture", to_string(p.conjecture.formula),
                     binary(p.conjecture.formula));
  return out;
}

ILSequent to_sequent(const ILProblem& p) {
  ILSequent s{{}, p.conjecture.formula};
  for (const auto& ax : p.axioms) s.antecedent.push_back(ax.formula);
  return s;
}

}  // namespace illtp
