#include "illtp/translate.hpp"

#include <stdexcept>

namespace illtp {

std::string_view tag(TranslationKind k) {
  switch (k) {
    case TranslationKind::Mult:
      return "mult";
    case TranslationKind::CallByName:
      return "cbn";
    case TranslationKind::CallByValue:
      return "cbv";
    case TranslationKind::ZeroOne:
      return "01";
  }
  return "?";
}

std::optional<TranslationKind> parse_translation_kind(std::string_view text) {
  for (TranslationKind k : kAllTranslations) {
    if (tag(k) == text) return k;
  }
  if (text == "m") return TranslationKind::Mult;
  if (text == "g" || text == "call-by-name") return TranslationKind::CallByName;
  if (text == "p" || text == "call-by-value" || text == "positive")
    return TranslationKind::CallByValue;
  if (text == "0/1" || text == "zero-one") return TranslationKind::ZeroOne;
  return std::nullopt;
}

namespace {

using F = Formula;

F expand_then(ILFormula f, F (*next)(ILFormula)) { return next(expand_defined(f)); }

}  // namespace

Formula trans_mult(ILFormula f) {
  switch (f.kind()) {
    case ILConnective::Atom:
      return F::atom(f.name());
    case ILConnective::True:
      return F::one();
    case ILConnective::False:
      return F::bot();
    case ILConnective::And:
      return F::tensor(trans_mult(f.left()), trans_mult(f.right()));
    case ILConnective::Or:
      return F::par(trans_mult(f.left()), trans_mult(f.right()));
    case ILConnective::Imp:
      return F::limp(trans_mult(f.left()), trans_mult(f.right()));
    case ILConnective::Not:
    case ILConnective::Equiv:
      return expand_then(f, &trans_mult);
  }
  throw std::logic_error("unreachable");
}

Formula trans_cbn(ILFormula f) {
  switch (f.kind()) {
    case ILConnective::Atom:
      return F::atom(f.name());
    case ILConnective::True:
      return F::top();
    case ILConnective::False:
      return F::zero();
    case ILConnective::And:
      return F::with(trans_cbn(f.left()), trans_cbn(f.right()));
    case ILConnective::Or:
      return F::plus(F::bang(trans_cbn(f.left())), F::bang(trans_cbn(f.right())));
    case ILConnective::Imp:
      return F::limp(F::bang(trans_cbn(f.left())), trans_cbn(f.right()));
    case ILConnective::Not:
    case ILConnective::Equiv:
      return expand_then(f, &trans_cbn);
  }
  throw std::logic_error("unreachable");
}

Formula trans_cbv(ILFormula f) {
  switch (f.kind()) {
    case ILConnective::Atom:
      return F::bang(F::atom(f.name()));
    case ILConnective::True:
      return F::one();
    case ILConnective::False:
      return F::zero();
    case ILConnective::And:
      return F::tensor(trans_cbv(f.left()), trans_cbv(f.right()));
    case ILConnective::Or:
      return F::plus(trans_cbv(f.left()), trans_cbv(f.right()));
    case ILConnective::Imp:
      return F::bang(F::limp(trans_cbv(f.left()), trans_cbv(f.right())));
    case ILConnective::Not:
    case ILConnective::Equiv:
      return expand_then(f, &trans_cbv);
  }
  throw std::logic_error("unreachable");
}

Formula trans_01(ILFormula f, Side side) {
  const bool left = side == Side::Left;
  switch (f.kind()) {
    case ILConnective::Atom:
      return F::atom(f.name());
    case ILConnective::True:
      return left ? F::top() : F::one();
    case ILConnective::False:
      return F::zero();
    case ILConnective::And:
      if (left)
        return F::with(F::bang(trans_01(f.left(), Side::Left)),
                       F::bang(trans_01(f.right(), Side::Left)));
      return F::bang(F::with(trans_01(f.left(), Side::Right), trans_01(f.right(), Side::Right)));
    case ILConnective::Or:
      return F::plus(F::bang(trans_01(f.left(), side)), F::bang(trans_01(f.right(), side)));
    case ILConnective::Imp:
      if (left)
        return F::limp(F::bang(trans_01(f.left(), Side::Right)),
                       F::bang(trans_01(f.right(), Side::Left)));
      return F::bang(
          F::limp(F::bang(trans_01(f.left(), Side::Left)), trans_01(f.right(), Side::Right)));
    case ILConnective::Not:
    case ILConnective::Equiv:
      return trans_01(expand_defined(f), side);
  }
  throw std::logic_error("unreachable");
}

Formula translate(ILFormula f, TranslationKind k) {
  switch (k) {
    case TranslationKind::Mult:
      return trans_mult(f);
    case TranslationKind::CallByName:
      return trans_cbn(f);
    case TranslationKind::CallByValue:
      return trans_cbv(f);
    case TranslationKind::ZeroOne:
      return trans_01(f, Side::Right);
  }
  throw std::logic_error("unreachable");
}

Sequent trans_sequent(const ILSequent& s, TranslationKind k) {
  Sequent out;
  for (ILFormula a : s.antecedent) {
    ILFormula e = expand_defined(a);
    switch (k) {
      case TranslationKind::Mult:
        out.antecedent.push_back(trans_mult(e));
        break;
      case TranslationKind::CallByName:
        out.antecedent.push_back(F::bang(trans_cbn(e)));
        break;
      case TranslationKind::CallByValue:
        out.antecedent.push_back(trans_cbv(e));
        break;
      case TranslationKind::ZeroOne:
        out.antecedent.push_back(F::bang(trans_01(e, Side::Left)));
        break;
    }
  }
  out.succedent = translate(expand_defined(s.succedent), k);
  return out;
}

}  // namespace illtp
