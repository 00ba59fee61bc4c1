#include "illtp/focused.hpp"

#include <pthread.h>

#include <algorithm>
#include <array>
#include <exception>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace illtp {

// ---------------------------------------------------------------------------
// Rules and states.

namespace {

constexpr std::array<std::string_view, 25> kRuleNames{
    "⊗L", "⊸R", "1L", "⊥R", "⊤R", "0L", "!L", "&R", "⊕L", "⊗R", "⊸L", "⊕R1", "⊕R2",
    "&L1", "&L2", "1R", "⊥L", "!R", "IR", "DL1", "DL2", "DR", "RL", "RR", "SAT"};

bool structural_less(Formula a, Formula b) { return structural_compare(a, b) < 0; }

void sort_structural(std::vector<Formula>& v) { std::sort(v.begin(), v.end(), structural_less); }

void sort_by_id(std::vector<Formula>& v) { std::sort(v.begin(), v.end(), FormulaIdLess{}); }

bool is_with_of_positives(Formula f) {
  return f.is(Connective::With) && is_positive(f.left()) && is_positive(f.right());
}

bool contains_formula(const std::vector<Formula>& v, Formula f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

// Multiset difference a − b.
std::vector<Formula> ms_minus(std::vector<Formula> a, std::vector<Formula> b) {
  sort_by_id(a);
  sort_by_id(b);
  std::vector<Formula> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      FormulaIdLess{});
  return out;
}

std::vector<Formula> ms_plus(std::vector<Formula> a, std::initializer_list<Formula> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool same_set(std::vector<Formula> a, std::vector<Formula> b) {
  sort_by_id(a);
  sort_by_id(b);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames.at(static_cast<std::size_t>(r)); }

std::optional<Rule> parse_rule(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  return std::nullopt;
}

std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::TopR:
    case Rule::ZeroL:
    case Rule::OneR:
    case Rule::BotL:
    case Rule::IR:
      return 0;
    case Rule::WithR:
    case Rule::PlusL:
    case Rule::TensorR:
    case Rule::LimpL:
      return 2;
    default:
      return 1;
  }
}

bool is_negative_rule(Rule r) {
  switch (r) {
    case Rule::TensorL:
    case Rule::LimpR:
    case Rule::OneL:
    case Rule::BotR:
    case Rule::TopR:
    case Rule::ZeroL:
    case Rule::BangL:
    case Rule::WithR:
    case Rule::PlusL:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Provable:
      return "Provable";
    case Verdict::NotProvable:
      return "NotProvable";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

std::string_view to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::None:
      return "";
    case UnknownReason::Timeout:
      return "Timeout";
    case UnknownReason::BoundHit:
      return "BoundHit";
    case UnknownReason::ParseError:
      return "ParseError";
    case UnknownReason::Unsupported:
      return "Unsupported";
  }
  return "?";
}

FocusedState FocusedState::neg(std::vector<Formula> theta, std::vector<Formula> gamma,
                               std::optional<Formula> delta) {
  FocusedState s{std::move(theta), std::move(gamma), GoalMode::Neg, std::nullopt, delta};
  s.canonicalize();
  return s;
}

FocusedState FocusedState::right_focus(std::vector<Formula> theta, std::vector<Formula> gamma,
                                       Formula focus) {
  FocusedState s{std::move(theta), std::move(gamma), GoalMode::RightFocus, focus, std::nullopt};
  s.canonicalize();
  return s;
}

FocusedState FocusedState::left_focus(std::vector<Formula> theta, std::vector<Formula> gamma,
                                      Formula focus, std::optional<Formula> delta) {
  FocusedState s{std::move(theta), std::move(gamma), GoalMode::LeftFocus, focus, delta};
  s.canonicalize();
  return s;
}

void FocusedState::canonicalize() {
  sort_structural(theta);
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  sort_structural(gamma);
}

bool FocusedState::operator==(const FocusedState& o) const {
  return mode == o.mode && focus == o.focus && delta == o.delta && same_set(theta, o.theta) &&
         same_multiset(gamma, o.gamma);
}

FocusedState initial_state(const Sequent& s) {
  return FocusedState::neg({}, s.antecedent, s.succedent);
}

bool is_normal(const FocusedState& st) {
  if (st.mode != GoalMode::Neg) return false;
  for (Formula f : st.gamma)
    if (!f.is_atom() && !is_negative(f)) return false;
  return !st.delta || is_positive(*st.delta);
}

std::string to_unicode(const FocusedState& st) {
  auto list = [](const std::vector<Formula>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += to_unicode(v[i]);
    }
    return out.empty() ? std::string("·") : out;
  };
  std::string out = list(st.theta) + " : " + list(st.gamma);
  switch (st.mode) {
    case GoalMode::Neg:
      out += " → ";
      break;
    case GoalMode::RightFocus:
      return out + " ⇓ " + to_unicode(*st.focus);
    case GoalMode::LeftFocus:
      out += " —" + to_unicode(*st.focus) + "→ ";
      break;
  }
  if (st.delta) out += to_unicode(*st.delta);
  return out;
}

std::size_t proof_size(const ProofTree& pt) {
  std::size_t n = 1;
  for (const auto& p : pt.premises) n += proof_size(p);
  return n;
}

// ---------------------------------------------------------------------------
// Saturation of the classical context.

namespace {

void add_saturated(std::vector<Formula>& set, Formula f) {
  if (is_with_of_positives(f)) {
    add_saturated(set, f.left());
    add_saturated(set, f.right());
    return;
  }
  if (!contains_formula(set, f)) set.push_back(f);
}

bool antecedent_available(const std::vector<Formula>& set, Formula a) {
  if (a.is_atom()) return contains_formula(set, a);
  return a.is(Connective::Bang) && a.body().is_atom() && contains_formula(set, a.body());
}

}  // namespace

std::vector<Formula> saturate_classical(std::vector<Formula> theta) {
  std::vector<Formula> set;
  for (Formula f : theta) add_saturated(set, f);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      Formula f = set[i];
      if (!f.is(Connective::Limp) || !antecedent_available(set, f.left())) continue;
      std::size_t before = set.size();
      add_saturated(set, f.right());
      changed |= set.size() != before;
    }
  }
  sort_structural(set);
  return set;
}

// ---------------------------------------------------------------------------
// Non-IO phase helpers on explicit states.

std::vector<FocusedState> negative_phase(const FocusedState& start) {
  std::vector<FocusedState> out;
  std::vector<FocusedState> work{start};
  while (!work.empty()) {
    FocusedState st = std::move(work.back());
    work.pop_back();
    if (st.delta && is_negative(*st.delta)) {
      Formula d = *st.delta;
      switch (d.kind()) {
        case Connective::Top:
          continue;
        case Connective::Bot:
          st.delta.reset();
          work.push_back(std::move(st));
          continue;
        case Connective::Limp:
          st.gamma.push_back(d.left());
          st.delta = d.right();
          work.push_back(std::move(st));
          continue;
        case Connective::With: {
          FocusedState second = st;
          st.delta = d.left();
          second.delta = d.right();
          work.push_back(std::move(second));
          work.push_back(std::move(st));
          continue;
        }
        default:
          break;  // ⅋ and ? have no rule here
      }
    }
    auto it = std::find_if(st.gamma.begin(), st.gamma.end(),
                           [](Formula f) { return !f.is_atom() && is_positive(f); });
    if (it == st.gamma.end()) {
      st.canonicalize();
      out.push_back(std::move(st));
      continue;
    }
    Formula f = *it;
    st.gamma.erase(it);
    switch (f.kind()) {
      case Connective::Zero:
        continue;
      case Connective::One:
        break;
      case Connective::Tensor:
        st.gamma.push_back(f.left());
        st.gamma.push_back(f.right());
        break;
      case Connective::Bang:
        if (!contains_formula(st.theta, f.body())) st.theta.push_back(f.body());
        break;
      case Connective::Plus: {
        FocusedState second = st;
        st.gamma.push_back(f.left());
        second.gamma.push_back(f.right());
        work.push_back(std::move(second));
        break;
      }
      default:
        break;
    }
    work.push_back(std::move(st));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Rule, FocusedState>> decide(
    const FocusedState& st, const std::vector<std::pair<Formula, std::uint32_t>>& uses,
    std::uint32_t bound) {
  std::vector<std::pair<Rule, FocusedState>> out;
  std::vector<Formula> seen;
  for (std::size_t i = 0; i < st.gamma.size(); ++i) {
    Formula n = st.gamma[i];
    if (!is_negative(n) || contains_formula(seen, n)) continue;
    seen.push_back(n);
    std::vector<Formula> rest = st.gamma;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(Rule::DL2, FocusedState::left_focus(st.theta, rest, n, st.delta));
  }
  if (st.delta && is_positive(*st.delta))
    out.emplace_back(Rule::DR, FocusedState::right_focus(st.theta, st.gamma, *st.delta));
  for (Formula t : st.theta) {
    if (t.is_atom()) continue;
    auto u = std::find_if(uses.begin(), uses.end(), [&](const auto& p) { return p.first == t; });
    if (u != uses.end() && u->second >= bound) continue;
    out.emplace_back(Rule::DL1, FocusedState::left_focus(st.theta, st.gamma, t, st.delta));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof checking.

namespace {

bool check_sat(const std::vector<Formula>& before, const std::vector<Formula>& after) {
  auto pieces_of_with = [](Formula w, Formula y) {
    return is_with_of_positives(w) && (w.left() == y || w.right() == y);
  };
  for (Formula x : before) {
    if (contains_formula(after, x)) continue;
    if (!is_with_of_positives(x) || !contains_formula(after, x.left()) ||
        !contains_formula(after, x.right()))
      return false;
  }
  for (Formula y : after) {
    if (contains_formula(before, y)) continue;
    bool ok = std::any_of(before.begin(), before.end(),
                          [&](Formula w) { return pieces_of_with(w, y); });
    ok = ok || std::any_of(after.begin(), after.end(), [&](Formula imp) {
           if (!imp.is(Connective::Limp) || !antecedent_available(after, imp.left())) return false;
           if (imp.is(Connective::Limp) && imp == y) return false;
           return imp.right() == y || pieces_of_with(imp.right(), y);
         });
    if (!ok) return false;
  }
  return true;
}

// Checks a left rule that swaps `principal` in Γ for `added`.
bool left_swap(const FocusedState& c, const FocusedState& p, std::initializer_list<Formula> added,
               auto&& principal_ok) {
  std::vector<Formula> removed = ms_minus(c.gamma, p.gamma);
  if (removed.size() != 1 || !principal_ok(removed[0])) return false;
  return same_multiset(ms_minus(p.gamma, c.gamma), std::vector<Formula>(added));
}

bool gamma_split(const FocusedState& c, const FocusedState& a, const FocusedState& b) {
  std::vector<Formula> joined = a.gamma;
  joined.insert(joined.end(), b.gamma.begin(), b.gamma.end());
  return same_multiset(joined, c.gamma);
}

bool well_formed(const FocusedState& st) {
  switch (st.mode) {
    case GoalMode::Neg:
      return !st.focus;
    case GoalMode::RightFocus:
      return st.focus && !st.delta;
    case GoalMode::LeftFocus:
      return st.focus.has_value();
  }
  return false;
}

bool check_node(const ProofTree& n) {
  const FocusedState& c = n.conclusion;
  const auto& ps = n.premises;
  if (ps.size() != rule_arity(n.rule) || !well_formed(c)) return false;
  for (const auto& p : ps)
    if (!well_formed(p.conclusion)) return false;
  for (const auto& p : ps) {
    bool theta_may_change = n.rule == Rule::BangL || n.rule == Rule::Sat;
    if (!theta_may_change && !same_set(p.conclusion.theta, c.theta)) return false;
  }
  const bool neg = c.mode == GoalMode::Neg;
  const bool rf = c.mode == GoalMode::RightFocus;
  const bool lf = c.mode == GoalMode::LeftFocus;
  auto P = [&](std::size_t i) -> const FocusedState& { return ps[i].conclusion; };
  auto is_k = [](Connective k) { return [k](Formula f) { return f.is(k); }; };

  switch (n.rule) {
    case Rule::TensorL: {
      if (!neg || P(0).mode != GoalMode::Neg || P(0).delta != c.delta) return false;
      std::vector<Formula> removed = ms_minus(c.gamma, P(0).gamma);
      if (removed.size() != 1 || !removed[0].is(Connective::Tensor)) return false;
      return left_swap(c, P(0), {removed[0].left(), removed[0].right()},
                       is_k(Connective::Tensor));
    }
    case Rule::LimpR:
      return neg && c.delta && c.delta->is(Connective::Limp) && P(0).mode == GoalMode::Neg &&
             P(0).delta == c.delta->right() &&
             same_multiset(P(0).gamma, ms_plus(c.gamma, {c.delta->left()}));
    case Rule::OneL:
      return neg && P(0).mode == GoalMode::Neg && P(0).delta == c.delta &&
             left_swap(c, P(0), {}, is_k(Connective::One));
    case Rule::BotR:
      return neg && c.delta == Formula::bot() && P(0).mode == GoalMode::Neg && !P(0).delta &&
             same_multiset(P(0).gamma, c.gamma);
    case Rule::TopR:
      return neg && c.delta == Formula::top();
    case Rule::ZeroL:
      return neg && contains_formula(c.gamma, Formula::zero());
    case Rule::BangL: {
      if (!neg || P(0).mode != GoalMode::Neg || P(0).delta != c.delta) return false;
      std::vector<Formula> removed = ms_minus(c.gamma, P(0).gamma);
      if (removed.size() != 1 || !removed[0].is(Connective::Bang)) return false;
      if (!left_swap(c, P(0), {}, is_k(Connective::Bang))) return false;
      std::vector<Formula> theta = c.theta;
      theta.push_back(removed[0].body());
      return same_set(theta, P(0).theta);
    }
    case Rule::WithR:
      return neg && c.delta && c.delta->is(Connective::With) && P(0).mode == GoalMode::Neg &&
             P(1).mode == GoalMode::Neg && P(0).delta == c.delta->left() &&
             P(1).delta == c.delta->right() && same_multiset(P(0).gamma, c.gamma) &&
             same_multiset(P(1).gamma, c.gamma);
    case Rule::PlusL: {
      if (!neg || P(0).mode != GoalMode::Neg || P(1).mode != GoalMode::Neg) return false;
      if (P(0).delta != c.delta || P(1).delta != c.delta) return false;
      std::vector<Formula> removed = ms_minus(c.gamma, P(0).gamma);
      if (removed.size() != 1 || !removed[0].is(Connective::Plus)) return false;
      Formula f = removed[0];
      auto is_f = [f](Formula g) { return g == f; };
      return left_swap(c, P(0), {f.left()}, is_f) && left_swap(c, P(1), {f.right()}, is_f);
    }
    case Rule::TensorR:
      return rf && c.focus->is(Connective::Tensor) && P(0).mode == GoalMode::RightFocus &&
             P(1).mode == GoalMode::RightFocus && P(0).focus == c.focus->left() &&
             P(1).focus == c.focus->right() && gamma_split(c, P(0), P(1));
    case Rule::LimpL:
      return lf && c.focus->is(Connective::Limp) && P(0).mode == GoalMode::RightFocus &&
             P(1).mode == GoalMode::LeftFocus && P(0).focus == c.focus->left() &&
             P(1).focus == c.focus->right() && P(1).delta == c.delta &&
             gamma_split(c, P(0), P(1));
    case Rule::PlusR1:
    case Rule::PlusR2: {
      if (!rf || !c.focus->is(Connective::Plus) || P(0).mode != GoalMode::RightFocus)
        return false;
      Formula chosen = n.rule == Rule::PlusR1 ? c.focus->left() : c.focus->right();
      return P(0).focus == chosen && same_multiset(P(0).gamma, c.gamma);
    }
    case Rule::WithL1:
    case Rule::WithL2: {
      if (!lf || !c.focus->is(Connective::With) || P(0).mode != GoalMode::LeftFocus)
        return false;
      Formula chosen = n.rule == Rule::WithL1 ? c.focus->left() : c.focus->right();
      return P(0).focus == chosen && P(0).delta == c.delta && same_multiset(P(0).gamma, c.gamma);
    }
    case Rule::OneR:
      return rf && c.focus == Formula::one() && c.gamma.empty();
    case Rule::BotL:
      return lf && c.focus == Formula::bot() && c.gamma.empty() && !c.delta;
    case Rule::BangR:
      return rf && c.focus->is(Connective::Bang) && c.gamma.empty() &&
             P(0).mode == GoalMode::Neg && P(0).gamma.empty() && P(0).delta == c.focus->body();
    case Rule::IR: {
      if (!rf || !c.focus->is_atom()) return false;
      if (c.gamma.size() == 1) return c.gamma[0] == *c.focus;
      return c.gamma.empty() && contains_formula(c.theta, *c.focus);
    }
    case Rule::DL1:
      return neg && P(0).mode == GoalMode::LeftFocus && !P(0).focus->is_atom() &&
             contains_formula(c.theta, *P(0).focus) && P(0).delta == c.delta &&
             same_multiset(P(0).gamma, c.gamma);
    case Rule::DL2:
      return neg && P(0).mode == GoalMode::LeftFocus && is_negative(*P(0).focus) &&
             P(0).delta == c.delta &&
             same_multiset(c.gamma, ms_plus(P(0).gamma, {*P(0).focus}));
    case Rule::DR:
      return neg && c.delta && is_positive(*c.delta) && P(0).mode == GoalMode::RightFocus &&
             P(0).focus == c.delta && same_multiset(P(0).gamma, c.gamma);
    case Rule::RL:
      return lf && is_positive(*c.focus) && P(0).mode == GoalMode::Neg &&
             P(0).delta == c.delta && same_multiset(P(0).gamma, ms_plus(c.gamma, {*c.focus}));
    case Rule::RR:
      return rf && is_negative(*c.focus) && P(0).mode == GoalMode::Neg &&
             P(0).delta == c.focus && same_multiset(P(0).gamma, c.gamma);
    case Rule::Sat:
      return P(0).mode == c.mode && P(0).focus == c.focus && P(0).delta == c.delta &&
             same_multiset(P(0).gamma, c.gamma) && check_sat(c.theta, P(0).theta);
  }
  return false;
}

bool check_tree(const ProofTree& n) {
  // Iterative walk: proofs of long Petri traces can be deep.
  std::vector<const ProofTree*> stack{&n};
  while (!stack.empty()) {
    const ProofTree* t = stack.back();
    stack.pop_back();
    if (!check_node(*t)) return false;
    for (const auto& p : t->premises) stack.push_back(&p);
  }
  return true;
}

}  // namespace

bool check_proof(const ProofTree& pt, const FocusedState& root) {
  return pt.conclusion == root && check_tree(pt);
}

bool check_proof(const ProofTree& pt, const Sequent& s) {
  return check_proof(pt, initial_state(s));
}

// ---------------------------------------------------------------------------
// Search engine.
//
// The linear context is managed by input/output threading: each subgoal
// receives a pool of resources and reports the resources it left unused,
// plus a slack flag that is set when a ⊤R or 0L leaf could have absorbed
// any leftover. Search is written in continuation-passing style so that
// alternative consumptions are enumerated by backtracking. The proof is
// first recorded as a skeleton of resource ids, then turned into a
// ProofTree with exact linear contexts once the root succeeds.

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

struct Res {
  std::uint32_t id;
  Formula f;
};
using Pool = std::vector<Res>;  // sorted by id
using Ids = std::vector<std::uint32_t>;
using Theta = std::shared_ptr<const std::vector<Formula>>;  // sorted by id

template <class Sig>
class FnRef;

template <class R, class... A>
class FnRef<R(A...)> {
 public:
  template <class F>
  FnRef(F& f)  // NOLINT(google-explicit-constructor)
      : obj_(&f), call_([](void* o, A... a) -> R { return (*static_cast<F*>(o))(a...); }) {}
  R operator()(A... a) const { return call_(obj_, a...); }

 private:
  void* obj_;
  R (*call_)(void*, A...);
};

struct SNode;
using SPtr = std::shared_ptr<const SNode>;

struct SNode {
  Rule rule;
  GoalMode mode;
  Theta theta;
  std::optional<Formula> focus;
  std::optional<Formula> delta;
  std::uint32_t principal = kNone;
  std::uint32_t fresh0 = kNone;
  std::uint32_t fresh1 = kNone;
  Ids used1;  // ⊗R, ⊸L: resources the first premise must consume
  Ids used2;
  bool slack1 = false;
  SPtr p0;
  SPtr p1;
  // Set on a replayed memo entry: p0 was found with these pool ids, in the
  // same positions as the ids of the pool it is now used with.
  std::shared_ptr<const Ids> replay_ids;
  Ids replay_current;
};

using Cont = FnRef<bool(const Pool&, bool, SPtr)>;

struct MemoEntry {
  Ids out;  // positions in the pool
  bool slack;
  SPtr proof;
  std::shared_ptr<const Ids> ids = nullptr;  // pool ids the proof refers to
};
using Memo = std::vector<MemoEntry>;
constexpr std::size_t kMemoLimit = 1'000'000;

struct Timeout {};

Ids output_key(const Pool& out, bool slack) {
  Ids key;
  key.reserve(out.size() + 1);
  for (const Res& r : out) key.push_back(r.id);
  key.push_back(slack ? 1 : 0);
  return key;
}

// Wraps a continuation whose answer depends only on (output, slack) and
// skips outputs it has already rejected.
template <class K>
struct Once {
  K& k;
  std::set<Ids> rejected;

  bool operator()(const Pool& out, bool s, SPtr p) {
    Ids key = output_key(out, s);
    if (rejected.contains(key)) return false;
    if (k(out, s, std::move(p))) return true;
    rejected.insert(std::move(key));
    return false;
  }
};

bool has_id(const Pool& p, std::uint32_t id) {
  return std::binary_search(p.begin(), p.end(), Res{id, Formula::one()},
                            [](const Res& a, const Res& b) { return a.id < b.id; });
}

Pool without(const Pool& p, std::uint32_t id) {
  Pool out;
  out.reserve(p.size());
  for (const Res& r : p)
    if (r.id != id) out.push_back(r);
  return out;
}

Pool with_res(Pool p, Res r) {
  p.push_back(r);  // fresh ids are the largest
  return p;
}

// Ids present in `a` but not in `b` (b ⊆ a).
Ids consumed(const Pool& a, const Pool& b) {
  Ids out;
  std::size_t j = 0;
  for (const Res& r : a) {
    while (j < b.size() && b[j].id < r.id) ++j;
    if (j < b.size() && b[j].id == r.id) continue;
    out.push_back(r.id);
  }
  return out;
}

Pool restrict_to(const Pool& p, const Ids& ids) {
  Pool out;
  for (const Res& r : p)
    if (std::binary_search(ids.begin(), ids.end(), r.id)) out.push_back(r);
  return out;
}

bool pool_subset(const Pool& a, const Pool& b) {
  for (const Res& r : a)
    if (!has_id(b, r.id)) return false;
  return true;
}

Pool pool_intersect(const Pool& a, const Pool& b) {
  Pool out;
  for (const Res& r : a)
    if (has_id(b, r.id)) out.push_back(r);
  return out;
}

// Removes resource `id` from the output of a subproof that had to consume
// it; fails unless it was consumed or a slack leaf can absorb it.
bool settle(Pool& out, bool slack, std::uint32_t id) {
  if (!has_id(out, id)) return true;
  if (!slack) return false;
  out = without(out, id);
  return true;
}

bool theta_has(const std::vector<Formula>& theta, Formula f) {
  return std::binary_search(theta.begin(), theta.end(), f, FormulaIdLess{});
}

struct KeyHash {
  std::size_t operator()(const Ids& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Engine {
 public:
  Engine(const SearchLimits& limits, std::uint32_t bound,
         std::chrono::steady_clock::time_point deadline, std::uint64_t& decides)
      : limits_(limits), bound_(bound), deadline_(deadline), decides_(decides) {}

  bool bound_hit() const { return bound_hit_; }

  std::optional<ProofTree> run(const FocusedState& st) {
    std::vector<Formula> theta = st.theta;
    sort_by_id(theta);
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    Theta th = std::make_shared<const std::vector<Formula>>(std::move(theta));
    Pool pool;
    for (Formula f : st.gamma) pool.push_back(fresh(f));

    std::optional<ProofTree> result;
    auto done = [&](const Pool& out, bool slack, SPtr proof) {
      if (!out.empty() && !slack) return false;
      result = finalize(*proof, pool);
      return true;
    };
    Cont k(done);
    switch (st.mode) {
      case GoalMode::Neg:
        neg(th, true, 0, pool, st.delta, k);
        break;
      case GoalMode::RightFocus:
        rfocus(th, pool, *st.focus, k);
        break;
      case GoalMode::LeftFocus:
        lfocus(th, pool, *st.focus, st.delta, k);
        break;
    }
    return result;
  }

 private:
  Res fresh(Formula f) { return Res{next_id_++, f}; }

  // Resource ids are allocated in stack order, so backtracking frees them.
  struct IdMark {
    std::uint32_t& next;
    std::uint32_t saved;
    explicit IdMark(std::uint32_t& n) : next(n), saved(n) {}
    ~IdMark() { next = saved; }
  };

  std::shared_ptr<SNode> node(Rule r, GoalMode m, const Theta& th, std::optional<Formula> focus,
            std::optional<Formula> delta) const {
    auto n = std::make_shared<SNode>();
    n->rule = r;
    n->mode = m;
    n->theta = th;
    n->focus = focus;
    n->delta = delta;
    return n;
  }

  std::shared_ptr<SNode> neg_node(Rule r, const Theta& th, std::optional<Formula> delta, SPtr p0 = nullptr,
                std::uint32_t principal = kNone, std::uint32_t f0 = kNone,
                std::uint32_t f1 = kNone) const {
    auto n = std::make_shared<SNode>();
    n->rule = r;
    n->mode = GoalMode::Neg;
    n->theta = th;
    n->delta = delta;
    n->principal = principal;
    n->fresh0 = f0;
    n->fresh1 = f1;
    n->p0 = std::move(p0);
    return n;
  }

  // Runs two premises that share the conclusion's linear context (&R, ⊕L).
  template <class Run1, class Run2, class Make>
  bool additive(const Pool& in, Run1&& run1, Run2&& run2, Make&& make, Cont k) {
    auto k1 = [&](const Pool& out1, bool s1, SPtr p1) {
      if (!s1) {
        Pool c1 = restrict_to(in, consumed(in, out1));
        auto k2 = [&](const Pool& out2, bool s2, SPtr p2) {
          if (!out2.empty() && !s2) return false;
          return k(out1, false, make(p1, std::move(p2)));
        };
        return run2(c1, Cont(k2));
      }
      auto k2 = [&](const Pool& out2, bool s2, SPtr p2) {
        if (!s2) {
          if (!pool_subset(out2, out1)) return false;
          return k(out2, false, make(p1, std::move(p2)));
        }
        return k(pool_intersect(out1, out2), true, make(p1, std::move(p2)));
      };
      return run2(in, Cont(k2));
    };
    Once<decltype(k1)> first{k1, {}};
    return run1(in, Cont(first));
  }

  // Negative phase. Resources with id >= first_local were introduced in this
  // phase and may be non-normal; older ones are normal by construction.
  bool neg(const Theta& th, bool dirty, std::uint32_t first_local, const Pool& pool,
           std::optional<Formula> delta, Cont k) {
    IdMark mark(next_id_);
    if (delta && is_negative(*delta)) {
      Formula d = *delta;
      switch (d.kind()) {
        case Connective::Top:
          return k(pool, true, neg_node(Rule::TopR, th, delta));
        case Connective::Bot: {
          auto kk = [&](const Pool& out, bool s, SPtr p) {
            return k(out, s, neg_node(Rule::BotR, th, delta, std::move(p)));
          };
          return neg(th, dirty, first_local, pool, std::nullopt, Cont(kk));
        }
        case Connective::Limp: {
          Res a = fresh(d.left());
          auto kk = [&](const Pool& out, bool s, SPtr p) {
            Pool o = out;
            if (!settle(o, s, a.id)) return false;
            return k(o, s, neg_node(Rule::LimpR, th, delta, std::move(p), kNone, a.id));
          };
          return neg(th, dirty, first_local, with_res(pool, a), d.right(), Cont(kk));
        }
        case Connective::With: {
          auto run1 = [&](const Pool& in, Cont c) {
            return neg(th, dirty, first_local, in, d.left(), c);
          };
          auto run2 = [&](const Pool& in, Cont c) {
            return neg(th, dirty, first_local, in, d.right(), c);
          };
          auto make = [&](SPtr p1, SPtr p2) {
            auto n = std::make_shared<SNode>();
            n->rule = Rule::WithR;
            n->mode = GoalMode::Neg;
            n->theta = th;
            n->delta = delta;
            n->p0 = std::move(p1);
            n->p1 = std::move(p2);
            return SPtr(n);
          };
          return additive(pool, run1, run2, make, k);
        }
        default:
          return false;
      }
    }

    const Res* target = nullptr;
    for (const Res& r : pool) {
      if (r.id < first_local || r.f.is_atom() || is_negative(r.f)) continue;
      if (r.f.is(Connective::Zero)) {
        target = &r;
        break;
      }
      if (!target || (target->f.is(Connective::Plus) && !r.f.is(Connective::Plus))) target = &r;
    }
    if (!target) return decide_phase(th, dirty, pool, delta, k);

    const Res r = *target;
    Pool rest = without(pool, r.id);
    switch (r.f.kind()) {
      case Connective::Zero:
        return k(rest, true, neg_node(Rule::ZeroL, th, delta, nullptr, r.id));
      case Connective::One: {
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          return k(out, s, neg_node(Rule::OneL, th, delta, std::move(p), r.id));
        };
        return neg(th, dirty, first_local, rest, delta, Cont(kk));
      }
      case Connective::Tensor: {
        Res a = fresh(r.f.left());
        Res b = fresh(r.f.right());
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          Pool o = out;
          if (!settle(o, s, a.id) || !settle(o, s, b.id)) return false;
          return k(o, s, neg_node(Rule::TensorL, th, delta, std::move(p), r.id, a.id, b.id));
        };
        return neg(th, dirty, first_local, with_res(with_res(rest, a), b), delta, Cont(kk));
      }
      case Connective::Bang: {
        Theta th2 = th;
        if (!theta_has(*th, r.f.body())) {
          auto v = *th;
          v.push_back(r.f.body());
          sort_by_id(v);
          th2 = std::make_shared<const std::vector<Formula>>(std::move(v));
        }
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          return k(out, s, neg_node(Rule::BangL, th, delta, std::move(p), r.id));
        };
        return neg(th2, dirty || th2 != th, first_local, rest, delta, Cont(kk));
      }
      case Connective::Plus: {
        Res a = fresh(r.f.left());
        Res b = fresh(r.f.right());
        auto run_side = [&](const Res& side, const Pool& in, Cont c) {
          auto kk = [&](const Pool& out, bool s, SPtr p) {
            Pool o = out;
            if (!settle(o, s, side.id)) return false;
            return c(o, s, std::move(p));
          };
          return neg(th, dirty, first_local, with_res(in, side), delta, Cont(kk));
        };
        auto run1 = [&](const Pool& in, Cont c) { return run_side(a, in, c); };
        auto run2 = [&](const Pool& in, Cont c) { return run_side(b, in, c); };
        auto make = [&](SPtr p1, SPtr p2) {
          auto n = std::make_shared<SNode>();
          n->rule = Rule::PlusL;
          n->mode = GoalMode::Neg;
          n->theta = th;
          n->delta = delta;
          n->principal = r.id;
          n->fresh0 = a.id;
          n->fresh1 = b.id;
          n->p0 = std::move(p1);
          n->p1 = std::move(p2);
          return SPtr(n);
        };
        return additive(rest, run1, run2, make, k);
      }
      default:
        return false;
    }
  }

  void tick() {
    ++decides_;
    if (limits_.node_budget && decides_ > limits_.node_budget) throw Timeout{};
    if (limits_.stop.stop_requested()) throw Timeout{};
    if ((decides_ & 63) == 0 && limits_.timeout.count() > 0 &&
        std::chrono::steady_clock::now() > deadline_)
      throw Timeout{};
  }

  Ids loop_key(const Theta& th, const Pool& pool, std::optional<Formula> delta) const {
    Ids key;
    key.reserve(th->size() + pool.size() + 3);
    for (Formula f : *th) key.push_back(f.id());
    key.push_back(kNone);
    std::size_t start = key.size();
    for (const Res& r : pool) key.push_back(r.f.id());
    std::sort(key.begin() + static_cast<std::ptrdiff_t>(start), key.end());
    key.push_back(kNone);
    key.push_back(delta ? delta->id() : kNone);
    return key;
  }

  // Normal state: saturate Θ if it grew, check for loops, then try every decide.
  bool decide_phase(const Theta& th0, bool dirty, const Pool& pool, std::optional<Formula> delta,
                    Cont k) {
    tick();
    if (limits_.saturate && dirty) {
      std::vector<Formula> sat = saturate_classical(*th0);
      sort_by_id(sat);
      if (sat != *th0) {
        Theta th = std::make_shared<const std::vector<Formula>>(std::move(sat));
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          auto n = neg_node(Rule::Sat, th0, delta, std::move(p));
          return k(out, s, n);
        };
        return decide_phase(th, false, pool, delta, Cont(kk));
      }
    }
    const Theta& th = th0;

    // With resources threaded through, a non-empty pool only bounds what the
    // state may consume, so two states with equal keys can still stand for
    // different sequents. Only an empty pool pins the sequent down.
    const bool check_loop = limits_.loop_check && pool.empty();
    Ids key;
    if (check_loop) {
      key = loop_key(th, pool, delta);
      if (ancestors_.contains(key)) {
        ++pruned_;
        return false;
      }
    }

    Ids memo_key = state_key(th, pool, delta);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return replay(it->second, pool, k);
    if (depth_ >= limits_.max_depth) {
      bound_hit_ = true;
      ++pruned_;
      return false;
    }
    const std::uint64_t pruned_before = pruned_;
    Memo found;

    // While a choice is explored this state is an ancestor of everything it
    // spawns; when the choice succeeds and control passes to the
    // continuation (a sibling branch), it no longer is.
    auto enter = [&] {
      ++depth_;
      if (check_loop) ++ancestors_[key];
    };
    auto leave = [&] {
      --depth_;
      if (check_loop) {
        auto it = ancestors_.find(key);
        if (--it->second == 0) ancestors_.erase(it);
      }
    };
    struct Scope {
      decltype(enter)& in;
      decltype(leave)& out;
      Scope(decltype(enter)& i, decltype(leave)& o) : in(i), out(o) { in(); }
      ~Scope() { out(); }
    };
    // Different decisions often leave the same resources behind. The
    // continuation's answer depends only on (output, slack), so an output it
    // has already rejected is not handed over again.
    std::set<Ids> rejected;
    auto pass = [&](const Pool& out, bool s, SPtr p, auto&& extra_leave, auto&& extra_enter) {
      Ids seen = output_key(out, s);
      if (rejected.contains(seen)) return false;
      found.push_back(MemoEntry{positions(pool, out), s, p});
      leave();
      extra_leave();
      // Re-enter even when the continuation throws, so the enclosing Scope
      // unwinds a consistent state.
      struct Reenter {
        decltype(extra_enter)& extra;
        decltype(enter)& in;
        ~Reenter() {
          extra();
          in();
        }
      } reenter{extra_enter, enter};
      if (k(out, s, std::move(p))) return true;
      rejected.insert(std::move(seen));
      return false;
    };
    auto nothing = [] {};

    auto try_dl2 = [&]() {
      std::vector<Formula> seen;
      for (auto it = pool.rbegin(); it != pool.rend(); ++it) {
        const Res r = *it;
        if (!is_negative(r.f) || contains_formula(seen, r.f)) continue;
        seen.push_back(r.f);
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          auto n = neg_node(Rule::DL2, th, delta, std::move(p), r.id);
          return pass(out, s, n, nothing, nothing);
        };
        Scope scope(enter, leave);
        if (lfocus(th, without(pool, r.id), r.f, delta, Cont(kk))) return true;
      }
      return false;
    };
    auto try_dr = [&]() {
      if (!delta || !is_positive(*delta)) return false;
      auto kk = [&](const Pool& out, bool s, SPtr p) {
        auto n = neg_node(Rule::DR, th, delta, std::move(p));
        return pass(out, s, n, nothing, nothing);
      };
      Scope scope(enter, leave);
      return rfocus(th, pool, *delta, Cont(kk));
    };
    auto try_dl1 = [&]() {
      for (Formula f : *th) {
        if (f.is_atom()) continue;
        std::uint32_t& uses = uses_[f];
        if (uses >= bound_) {
          bound_hit_ = true;
          ++pruned_;
          continue;
        }
        auto dec = [&] { --uses_[f]; };
        auto inc = [&] { ++uses_[f]; };
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          auto n = neg_node(Rule::DL1, th, delta, std::move(p));
          return pass(out, s, n, dec, inc);
        };
        Scope scope(enter, leave);
        inc();
        bool ok = lfocus(th, pool, f, delta, Cont(kk));
        dec();
        if (ok) return true;
      }
      return false;
    };

    bool ok = false;
    switch (limits_.order) {
      case DecideOrder::LinearFirst:
        ok = try_dl2() || try_dr() || try_dl1();
        break;
      case DecideOrder::RightFirst:
        ok = try_dr() || try_dl2() || try_dl1();
        break;
      case DecideOrder::ClassicalFirst:
        ok = try_dl1() || try_dl2() || try_dr();
        break;
    }
    // A failed exploration that nothing cut short has seen every output this
    // state can produce.
    if (!ok && pruned_ == pruned_before && memo_.size() < kMemoLimit) {
      auto ids = std::make_shared<const Ids>(pool_ids(pool));
      for (MemoEntry& e : found) e.ids = ids;
      memo_.emplace(std::move(memo_key), std::move(found));
    }
    return ok;
  }

  // Θ, Δ, the formulas of the pool in order, and the DL1 budget left for
  // each classical formula.
  Ids state_key(const Theta& th, const Pool& pool, std::optional<Formula> delta) {
    Ids key;
    key.reserve(2 * th->size() + pool.size() + 3);
    for (Formula f : *th) key.push_back(f.id());
    key.push_back(kNone);
    key.push_back(delta ? delta->id() : kNone);
    for (const Res& r : pool) key.push_back(r.f.id());
    key.push_back(kNone);
    for (Formula f : *th) {
      auto it = uses_.find(f);
      key.push_back(it == uses_.end() ? 0 : it->second);
    }
    return key;
  }

  static Ids pool_ids(const Pool& pool) {
    Ids ids;
    ids.reserve(pool.size());
    for (const Res& r : pool) ids.push_back(r.id);
    return ids;
  }

  // Positions in `pool` of the resources in `out` (out ⊆ pool, both sorted).
  static Ids positions(const Pool& pool, const Pool& out) {
    Ids pos;
    std::size_t j = 0;
    for (std::uint32_t i = 0; i < pool.size() && j < out.size(); ++i) {
      if (pool[i].id == out[j].id) {
        pos.push_back(i);
        ++j;
      }
    }
    return pos;
  }

  bool replay(const Memo& entries, const Pool& pool, Cont k) {
    for (const MemoEntry& e : entries) {
      Pool out;
      for (std::uint32_t i : e.out) out.push_back(pool[i]);
      auto n = std::make_shared<SNode>(*e.proof);
      n->replay_ids = e.ids;
      n->replay_current = pool_ids(pool);
      n->p0 = e.proof;
      if (k(out, e.slack, n)) return true;
    }
    return false;
  }

  bool rfocus(const Theta& th, const Pool& pool, Formula f, Cont k) {
    switch (f.kind()) {
      case Connective::Atom: {
        for (auto it = pool.rbegin(); it != pool.rend(); ++it) {
          if (!(it->f == f)) continue;
          auto n = node(Rule::IR, GoalMode::RightFocus, th, f, std::nullopt);
          n->principal = it->id;
          if (k(without(pool, it->id), false, n)) return true;
          break;
        }
        if (theta_has(*th, f))
          return k(pool, false, node(Rule::IR, GoalMode::RightFocus, th, f, std::nullopt));
        return false;
      }
      case Connective::One:
        return k(pool, false, node(Rule::OneR, GoalMode::RightFocus, th, f, std::nullopt));
      case Connective::Zero:
        return false;
      case Connective::Tensor: {
        auto k1 = [&](const Pool& out1, bool s1, SPtr p1) {
          auto k2 = [&](const Pool& out2, bool s2, SPtr p2) {
            auto n = node(Rule::TensorR, GoalMode::RightFocus, th, f, std::nullopt);
            n->used1 = consumed(pool, out1);
            n->used2 = consumed(out1, out2);
            n->slack1 = s1;
            n->p0 = p1;
            n->p1 = std::move(p2);
            return k(out2, s1 || s2, n);
          };
          return rfocus(th, out1, f.right(), Cont(k2));
        };
        Once<decltype(k1)> first{k1, {}};
        return rfocus(th, pool, f.left(), Cont(first));
      }
      case Connective::Plus: {
        for (Rule r : {Rule::PlusR1, Rule::PlusR2}) {
          auto kk = [&](const Pool& out, bool s, SPtr p) {
            auto n = node(r, GoalMode::RightFocus, th, f, std::nullopt);
            n->p0 = std::move(p);
            return k(out, s, n);
          };
          if (rfocus(th, pool, r == Rule::PlusR1 ? f.left() : f.right(), Cont(kk))) return true;
        }
        return false;
      }
      case Connective::Bang: {
        // The premise has an empty linear context, so one proof of it is as
        // good as any other: stop at the first.
        SPtr premise;
        auto kk = [&](const Pool&, bool, SPtr p) {
          premise = std::move(p);
          return true;
        };
        if (!neg(th, false, 0, Pool{}, f.body(), Cont(kk))) return false;
        auto n = node(Rule::BangR, GoalMode::RightFocus, th, f, std::nullopt);
        n->p0 = std::move(premise);
        return k(pool, false, n);
      }
      default: {
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          auto n = node(Rule::RR, GoalMode::RightFocus, th, f, std::nullopt);
          n->p0 = std::move(p);
          return k(out, s, n);
        };
        return neg(th, false, next_id_, pool, f, Cont(kk));
      }
    }
  }

  bool lfocus(const Theta& th, const Pool& pool, Formula f, std::optional<Formula> delta,
              Cont k) {
    IdMark mark(next_id_);
    switch (f.kind()) {
      case Connective::Limp: {
        auto k1 = [&](const Pool& out1, bool s1, SPtr p1) {
          auto k2 = [&](const Pool& out2, bool s2, SPtr p2) {
            auto n = node(Rule::LimpL, GoalMode::LeftFocus, th, f, delta);
            n->used1 = consumed(pool, out1);
            n->used2 = consumed(out1, out2);
            n->slack1 = s1;
            n->p0 = p1;
            n->p1 = std::move(p2);
            return k(out2, s1 || s2, n);
          };
          return lfocus(th, out1, f.right(), delta, Cont(k2));
        };
        Once<decltype(k1)> first{k1, {}};
        return rfocus(th, pool, f.left(), Cont(first));
      }
      case Connective::With: {
        for (Rule r : {Rule::WithL1, Rule::WithL2}) {
          auto kk = [&](const Pool& out, bool s, SPtr p) {
            auto n = node(r, GoalMode::LeftFocus, th, f, delta);
            n->p0 = std::move(p);
            return k(out, s, n);
          };
          if (lfocus(th, pool, r == Rule::WithL1 ? f.left() : f.right(), delta, Cont(kk)))
            return true;
        }
        return false;
      }
      case Connective::Bot:
        if (delta) return false;
        return k(pool, false, node(Rule::BotL, GoalMode::LeftFocus, th, f, delta));
      case Connective::Top:
      case Connective::Par:
      case Connective::Quest:
        return false;
      default: {
        Res a = fresh(f);
        auto kk = [&](const Pool& out, bool s, SPtr p) {
          Pool o = out;
          if (!settle(o, s, a.id)) return false;
          auto n = node(Rule::RL, GoalMode::LeftFocus, th, f, delta);
          n->fresh0 = a.id;
          n->p0 = std::move(p);
          return k(o, s, n);
        };
        return neg(th, false, a.id, with_res(pool, a), delta, Cont(kk));
      }
    }
  }

  // -------------------------------------------------------------------------
  // Skeleton to ProofTree. `actual` is the exact linear context (ids) of the
  // node; it contains the node's mandatory consumption plus leftovers that
  // only a slack premise can take.

  ProofTree finalize(const SNode& n, Pool actual) {
    if (n.replay_ids) {
      for (Res& r : actual) {
        auto it = std::lower_bound(n.replay_current.begin(), n.replay_current.end(), r.id);
        r.id = (*n.replay_ids)[static_cast<std::size_t>(it - n.replay_current.begin())];
      }
      return finalize(*n.p0, std::move(actual));
    }
    std::sort(actual.begin(), actual.end(), [](const Res& x, const Res& y) { return x.id < y.id; });
    ProofTree pt;
    pt.rule = n.rule;
    pt.conclusion.theta = *n.theta;
    for (const Res& r : actual) pt.conclusion.gamma.push_back(r.f);
    pt.conclusion.mode = n.mode;
    pt.conclusion.focus = n.focus;
    pt.conclusion.delta = n.delta;
    pt.conclusion.canonicalize();

    auto principal = [&]() -> Formula {
      for (const Res& r : actual)
        if (r.id == n.principal) return r.f;
      throw std::logic_error("proof skeleton refers to a missing resource");
    };
    auto minus = [&]() { return without(actual, n.principal); };
    auto plus = [](Pool v, std::initializer_list<Res> rs) {
      v.insert(v.end(), rs.begin(), rs.end());
      return v;
    };

    switch (n.rule) {
      case Rule::TensorL: {
        Formula f = principal();
        pt.premises.push_back(
            finalize(*n.p0, plus(minus(), {Res{n.fresh0, f.left()}, Res{n.fresh1, f.right()}})));
        break;
      }
      case Rule::LimpR:
        pt.premises.push_back(finalize(*n.p0, plus(actual, {Res{n.fresh0, n.delta->left()}})));
        break;
      case Rule::RL:
        pt.premises.push_back(finalize(*n.p0, plus(actual, {Res{n.fresh0, *n.focus}})));
        break;
      case Rule::OneL:
      case Rule::BangL:
      case Rule::DL2:
        pt.premises.push_back(finalize(*n.p0, minus()));
        break;
      case Rule::WithR:
        pt.premises.push_back(finalize(*n.p0, actual));
        pt.premises.push_back(finalize(*n.p1, actual));
        break;
      case Rule::PlusL: {
        Formula f = principal();
        pt.premises.push_back(finalize(*n.p0, plus(minus(), {Res{n.fresh0, f.left()}})));
        pt.premises.push_back(finalize(*n.p1, plus(minus(), {Res{n.fresh1, f.right()}})));
        break;
      }
      case Rule::TensorR:
      case Rule::LimpL: {
        // Leftovers beyond both premises' own consumption go to a slack premise.
        auto in = [](const Ids& ids, std::uint32_t id) {
          return std::find(ids.begin(), ids.end(), id) != ids.end();
        };
        Pool left;
        Pool right;
        for (const Res& r : actual) {
          bool to_left = n.slack1 ? !in(n.used2, r.id) : in(n.used1, r.id);
          (to_left ? left : right).push_back(r);
        }
        pt.premises.push_back(finalize(*n.p0, std::move(left)));
        pt.premises.push_back(finalize(*n.p1, std::move(right)));
        break;
      }
      case Rule::BangR:
        pt.premises.push_back(finalize(*n.p0, {}));
        break;
      case Rule::BotR:
      case Rule::PlusR1:
      case Rule::PlusR2:
      case Rule::WithL1:
      case Rule::WithL2:
      case Rule::DL1:
      case Rule::DR:
      case Rule::RR:
      case Rule::Sat:
        pt.premises.push_back(finalize(*n.p0, actual));
        break;
      case Rule::TopR:
      case Rule::ZeroL:
      case Rule::OneR:
      case Rule::BotL:
      case Rule::IR:
        break;
    }
    return pt;
  }

  const SearchLimits& limits_;
  std::uint32_t bound_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t& decides_;
  bool bound_hit_ = false;
  std::uint32_t depth_ = 0;
  std::uint32_t next_id_ = 0;
  std::unordered_map<Formula, std::uint32_t> uses_;
  std::unordered_map<Ids, std::uint32_t, KeyHash> ancestors_;
  // Complete output sets of explored decide states.
  std::unordered_map<Ids, Memo, KeyHash> memo_;
  std::uint64_t pruned_ = 0;
};

// Deep searches recurse deeply; run them on a thread with a large stack.
template <class F>
void run_with_big_stack(F&& body) {
  constexpr std::size_t kStack = std::size_t{1} << 30;
  struct Payload {
    F* body;
    std::exception_ptr error;
  } payload{&body, nullptr};
  auto trampoline = [](void* arg) -> void* {
    auto* p = static_cast<Payload*>(arg);
    try {
      (*p->body)();
    } catch (...) {
      p->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kStack);
  pthread_t thread;
  int rc = pthread_create(&thread, &attr, trampoline, &payload);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    body();  // fall back to the current thread
    return;
  }
  pthread_join(thread, nullptr);
  if (payload.error) std::rethrow_exception(payload.error);
}

void require_admissible(const FocusedState& st) {
  auto check = [](Formula f) {
    if (!is_ill_admissible(f))
      throw NonAdmissibleFormula("formula outside intuitionistic linear logic: " + to_unicode(f));
  };
  for (Formula f : st.theta) check(f);
  for (Formula f : st.gamma) check(f);
  if (st.focus) check(*st.focus);
  if (st.delta) check(*st.delta);
}

}  // namespace

ProveResult prove_state(const FocusedState& st, const SearchLimits& limits) {
  require_admissible(st);
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + limits.timeout;
  ProveResult result;
  std::uint64_t decides = 0;

  std::vector<std::uint32_t> bounds;
  const std::uint32_t final_bound = std::max<std::uint32_t>(limits.decide_bound, 1);
  if (limits.iterative_deepening)
    for (std::uint32_t b = 1; b < final_bound; b *= 2) bounds.push_back(b);
  bounds.push_back(final_bound);

  run_with_big_stack([&] {
    try {
      for (std::uint32_t b : bounds) {
        Engine engine(limits, b, deadline, decides);
        auto proof = engine.run(st);
        if (proof) {
          result.verdict = Verdict::Provable;
          result.proof = std::move(proof);
          return;
        }
        if (!engine.bound_hit()) {
          result.verdict = Verdict::NotProvable;
          return;
        }
      }
      result.verdict = Verdict::Unknown;
      result.reason = UnknownReason::BoundHit;
    } catch (const Timeout&) {
      result.verdict = Verdict::Unknown;
      result.reason = UnknownReason::Timeout;
    }
  });

  result.decides = decides;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ProveResult prove(const Sequent& s, const SearchLimits& limits) {
  return prove_state(initial_state(s), limits);
}

ProveResult positive_phase(const FocusedState& st, const SearchLimits& limits) {
  return prove_state(st, limits);
}

}  // namespace illtp
