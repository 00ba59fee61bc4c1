#include "illtp/il_prover.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace illtp {
namespace {

using IF = ILFormula;
using Ctx = std::vector<IF>;  // sorted by id, no duplicates

void normalize(Ctx& c) {
  std::sort(c.begin(), c.end(), [](IF a, IF b) { return a.id() < b.id(); });
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

bool contains(const Ctx& c, IF f) {
  return std::binary_search(c.begin(), c.end(), f, [](IF a, IF b) { return a.id() < b.id(); });
}

Ctx replace(const Ctx& c, IF removed, std::initializer_list<IF> added) {
  Ctx out;
  out.reserve(c.size() + added.size());
  for (IF f : c)
    if (!(f == removed)) out.push_back(f);
  out.insert(out.end(), added.begin(), added.end());
  normalize(out);
  return out;
}

Ctx with_added(const Ctx& c, IF added) {
  Ctx out = c;
  out.push_back(added);
  normalize(out);
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class G4ip {
 public:
  explicit G4ip(const ILLimits& limits) : limits_(limits) {}

  std::optional<ILProofTree> prove(const Ctx& ctx, IF goal) {
    if (++nodes_ > limits_.node_budget)
      throw ResourceExceeded("intuitionistic search exceeded its node budget");
    std::vector<std::uint32_t> key;
    key.reserve(ctx.size() + 1);
    key.push_back(goal.id());
    for (IF f : ctx) key.push_back(f.id());
    if (failed_.contains(key)) return std::nullopt;
    auto result = search(ctx, goal);
    if (!result) failed_.insert(std::move(key));
    return result;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static ILProofTree node(std::string rule, const Ctx& ctx, IF goal,
                          std::vector<ILProofTree> premises = {}) {
    return ILProofTree{std::move(rule), ILSequent{ctx, goal}, std::move(premises)};
  }

  std::optional<ILProofTree> unary(const char* rule, const Ctx& ctx, IF goal, const Ctx& p,
                                   IF pgoal) {
    auto sub = prove(p, pgoal);
    if (!sub) return std::nullopt;
    return node(rule, ctx, goal, {std::move(*sub)});
  }

  std::optional<ILProofTree> binary(const char* rule, const Ctx& ctx, IF goal, const Ctx& p1,
                                    IF g1, const Ctx& p2, IF g2) {
    auto a = prove(p1, g1);
    if (!a) return std::nullopt;
    auto b = prove(p2, g2);
    if (!b) return std::nullopt;
    return node(rule, ctx, goal, {std::move(*a), std::move(*b)});
  }

  std::optional<ILProofTree> search(const Ctx& ctx, IF goal) {
    if (contains(ctx, IF::falsity())) return node("fL", ctx, goal);
    if (goal.is(ILConnective::Atom) && contains(ctx, goal)) return node("Ax", ctx, goal);
    if (goal.is(ILConnective::True)) return node("tR", ctx, goal);

    // Invertible left rules.
    for (IF f : ctx) {
      switch (f.kind()) {
        case ILConnective::True:
          return unary("tL", ctx, goal, replace(ctx, f, {}), goal);
        case ILConnective::And:
          return unary("andL", ctx, goal, replace(ctx, f, {f.left(), f.right()}), goal);
        case ILConnective::Or:
          return binary("orL", ctx, goal, replace(ctx, f, {f.left()}), goal,
                        replace(ctx, f, {f.right()}), goal);
        case ILConnective::Imp: {
          IF a = f.left();
          IF b = f.right();
          switch (a.kind()) {
            case ILConnective::Atom:
              if (contains(ctx, a)) return unary("atomImpL", ctx, goal, replace(ctx, f, {b}), goal);
              break;
            case ILConnective::True:
              return unary("tImpL", ctx, goal, replace(ctx, f, {b}), goal);
            case ILConnective::False:
              return unary("fImpL", ctx, goal, replace(ctx, f, {}), goal);
            case ILConnective::And:
              return unary("andImpL", ctx, goal,
                           replace(ctx, f, {IF::imp(a.left(), IF::imp(a.right(), b))}), goal);
            case ILConnective::Or:
              return unary("orImpL", ctx, goal,
                           replace(ctx, f, {IF::imp(a.left(), b), IF::imp(a.right(), b)}), goal);
            default:
              break;
          }
          break;
        }
        default:
          break;
      }
    }

    // Invertible right rules.
    if (goal.is(ILConnective::Imp))
      return unary("impR", ctx, goal, with_added(ctx, goal.left()), goal.right());
    if (goal.is(ILConnective::And))
      return binary("andR", ctx, goal, ctx, goal.left(), ctx, goal.right());

    // Choice points.
    if (goal.is(ILConnective::Or)) {
      if (auto p = unary("orR1", ctx, goal, ctx, goal.left())) return p;
      if (auto p = unary("orR2", ctx, goal, ctx, goal.right())) return p;
    }
    for (IF f : ctx) {
      if (!f.is(ILConnective::Imp) || !f.left().is(ILConnective::Imp)) continue;
      IF d = f.left().right();
      IF b = f.right();
      if (auto p = binary("impImpL", ctx, goal, replace(ctx, f, {IF::imp(d, b)}), f.left(),
                          replace(ctx, f, {b}), goal))
        return p;
    }
    return std::nullopt;
  }

  ILLimits limits_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<std::vector<std::uint32_t>, KeyHash> failed_;
};

Ctx context_of(const ILSequent& s) {
  Ctx c = s.antecedent;
  normalize(c);
  return c;
}

bool same_set(const std::vector<IF>& a, const std::vector<IF>& b) {
  Ctx x = a;
  Ctx y = b;
  normalize(x);
  normalize(y);
  return x == y;
}

// Checks that `premise` is `conclusion` with `removed` taken out and
// `added` put in, with goal `goal`.
bool premise_is(const ILProofTree& premise, const Ctx& ctx, IF removed,
                std::initializer_list<IF> added, IF goal) {
  return premise.sequent.succedent == goal &&
         same_set(premise.sequent.antecedent, replace(ctx, removed, added));
}

bool check_node(const ILProofTree& n) {
  const Ctx ctx = context_of(n.sequent);
  const IF goal = n.sequent.succedent;
  const auto& ps = n.premises;
  const std::string& r = n.rule;

  auto arity = [&](std::size_t k) { return ps.size() == k; };
  auto any_left = [&](auto&& pred) { return std::any_of(ctx.begin(), ctx.end(), pred); };

  if (r == "Ax") return arity(0) && goal.is(ILConnective::Atom) && contains(ctx, goal);
  if (r == "fL") return arity(0) && contains(ctx, IF::falsity());
  if (r == "tR") return arity(0) && goal.is(ILConnective::True);
  if (r == "tL")
    return arity(1) && contains(ctx, IF::truth()) &&
           premise_is(ps[0], ctx, IF::truth(), {}, goal);
  if (r == "andL")
    return arity(1) && any_left([&](IF f) {
             return f.is(ILConnective::And) &&
                    premise_is(ps[0], ctx, f, {f.left(), f.right()}, goal);
           });
  if (r == "orL")
    return arity(2) && any_left([&](IF f) {
             return f.is(ILConnective::Or) && premise_is(ps[0], ctx, f, {f.left()}, goal) &&
                    premise_is(ps[1], ctx, f, {f.right()}, goal);
           });
  if (r == "impR")
    return arity(1) && goal.is(ILConnective::Imp) && ps[0].sequent.succedent == goal.right() &&
           same_set(ps[0].sequent.antecedent, with_added(ctx, goal.left()));
  if (r == "andR")
    return arity(2) && goal.is(ILConnective::And) && ps[0].sequent.succedent == goal.left() &&
           ps[1].sequent.succedent == goal.right() && same_set(ps[0].sequent.antecedent, ctx) &&
           same_set(ps[1].sequent.antecedent, ctx);
  if (r == "orR1" || r == "orR2") {
    if (!arity(1) || !goal.is(ILConnective::Or)) return false;
    IF chosen = r == "orR1" ? goal.left() : goal.right();
    return ps[0].sequent.succedent == chosen && same_set(ps[0].sequent.antecedent, ctx);
  }
  auto imp_with = [&](ILConnective k) {
    return [&, k](IF f) { return f.is(ILConnective::Imp) && f.left().is(k); };
  };
  if (r == "atomImpL")
    return arity(1) && any_left([&](IF f) {
             return imp_with(ILConnective::Atom)(f) && contains(ctx, f.left()) &&
                    premise_is(ps[0], ctx, f, {f.right()}, goal);
           });
  if (r == "tImpL")
    return arity(1) && any_left([&](IF f) {
             return imp_with(ILConnective::True)(f) &&
                    premise_is(ps[0], ctx, f, {f.right()}, goal);
           });
  if (r == "fImpL")
    return arity(1) && any_left([&](IF f) {
             return imp_with(ILConnective::False)(f) && premise_is(ps[0], ctx, f, {}, goal);
           });
  if (r == "andImpL")
    return arity(1) && any_left([&](IF f) {
             if (!imp_with(ILConnective::And)(f)) return false;
             IF a = f.left();
             return premise_is(ps[0], ctx, f, {IF::imp(a.left(), IF::imp(a.right(), f.right()))},
                               goal);
           });
  if (r == "orImpL")
    return arity(1) && any_left([&](IF f) {
             if (!imp_with(ILConnective::Or)(f)) return false;
             IF a = f.left();
             return premise_is(ps[0], ctx, f,
                               {IF::imp(a.left(), f.right()), IF::imp(a.right(), f.right())},
                               goal);
           });
  if (r == "impImpL")
    return arity(2) && any_left([&](IF f) {
             if (!imp_with(ILConnective::Imp)(f)) return false;
             IF d = f.left().right();
             IF b = f.right();
             return premise_is(ps[0], ctx, f, {IF::imp(d, b)}, f.left()) &&
                    premise_is(ps[1], ctx, f, {b}, goal);
           });
  return false;
}

bool check_tree(const ILProofTree& n) {
  if (!check_node(n)) return false;
  return std::all_of(n.premises.begin(), n.premises.end(), check_tree);
}

ILSequent expanded(const ILSequent& s) {
  ILSequent out{{}, expand_defined(s.succedent)};
  for (IF f : s.antecedent) out.antecedent.push_back(expand_defined(f));
  return out;
}

}  // namespace

ILProofResult prove_il(const ILSequent& s, const ILLimits& limits) {
  ILSequent e = expanded(s);
  G4ip search(limits);
  auto proof = search.prove(context_of(e), e.succedent);
  ILProofResult result;
  result.provable = proof.has_value();
  result.proof = std::move(proof);
  result.nodes = search.nodes();
  return result;
}

bool check_il_proof(const ILProofTree& proof, const ILSequent& s) {
  ILSequent e = expanded(s);
  if (!(proof.sequent.succedent == e.succedent)) return false;
  if (!same_set(proof.sequent.antecedent, e.antecedent)) return false;
  return check_tree(proof);
}

std::size_t proof_size(const ILProofTree& proof) {
  std::size_t n = 1;
  for (const auto& p : proof.premises) n += proof_size(p);
  return n;
}

}  // namespace illtp
