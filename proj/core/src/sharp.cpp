#include "ecalc/sharp.hpp"

#include "ecalc/error.hpp"

namespace ecalc {

ZetaExpr sharp_term(const WeylGroup& group, const WeylWord& w, const TorusCharacter& lambda) {
  const RootSystem& sys = group.system();
  const WeylWord inv = w.inverse();
  ZetaExpr f;
  for (const Root& a : sys.positive_roots()) {
    const AffineForm p = pairing(sys, lambda, a);
    const bool stays_positive = weyl_act(sys, inv, a).positive();
    f *= ZetaExpr::xi(sys.label_of(a), stays_positive ? p + AffineForm(1) : p);
  }
  return f;
}

RationalFunction sharp_polynomial(const RootSystem& system, const TorusCharacter& lambda) {
  RationalFunction l;
  for (const Root& a : system.positive_roots()) {
    const AffineForm p = pairing(system, lambda, a);
    l *= RationalFunction::factor(p + AffineForm(1)) * RationalFunction::factor(p - AffineForm(1));
  }
  return l;
}

InvarianceResult sharp_invariance_check(const RootSystem& system, int simple_index) {
  const WeylGroup group(system);
  const TorusCharacter lambda = TorusCharacter::generic(system.rank(), "x");
  const TorusCharacter moved = reflect_character(system, simple_index, lambda);
  InvarianceResult res;
  if (!(sharp_polynomial(system, moved) == sharp_polynomial(system, lambda))) {
    res.ok = false;
    res.detail = "L(lambda) is not invariant";
    return res;
  }
  const WeylWord si{{simple_index}};
  for (const WeylWord& w : group.elements()) {
    const WeylWord partner = group.reduce(si * w);
    const bool same_term = equivalent(sharp_term(group, w, moved), sharp_term(group, partner, lambda));
    const bool same_exp = weyl_act(system, w.inverse(), moved) == weyl_act(system, partner.inverse(), lambda);
    if (!same_term || !same_exp) {
      res.ok = false;
      res.mismatch = {w, partner};
      res.detail = same_term ? "exponent mismatch" : "F_w mismatch";
      return res;
    }
  }
  return res;
}

namespace {

// lambda restricted to <lambda, alpha^v> = eps + t; every other direction stays generic.
TorusCharacter hyperplane_character(const RootSystem& system, const Root& alpha, int eps) {
  const std::vector<int> c = system.coroot(alpha);
  int pivot = -1;
  for (int j = 0; j < system.rank(); ++j)
    if (c[j] != 0) pivot = j;
  TorusCharacter lambda = TorusCharacter::generic(system.rank(), "x");
  AffineForm solved = AffineForm::variable("t") + AffineForm(eps);
  for (int j = 0; j < system.rank(); ++j)
    if (j != pivot) solved -= lambda.coords[j] * Rational(c[j]);
  lambda.coords[pivot] = solved * Rational(1, c[pivot]);
  return lambda;
}

LaurentData expand_on_hyperplane(const ZetaExpr& e) {
  try {
    return leading_coeff_at(e, {"t", Rational(0), {}});
  } catch (const CalcError& err) {
    if (err.code() == ErrorCode::DegenerateArgument)
      throw CalcError(ErrorCode::HyperplaneDegeneracy, err.detail());
    throw;
  }
}

}  // namespace

bool h0_cancellation_check(const WeylGroup& group, const Root& alpha, const WeylWord& w) {
  const RootSystem& sys = group.system();
  const TorusCharacter lambda = hyperplane_character(sys, alpha, 0);
  const WeylWord partner = group.reduce(group.reflection(alpha) * w);
  const LaurentData a = expand_on_hyperplane(sharp_term(group, w, lambda));
  const LaurentData b = expand_on_hyperplane(sharp_term(group, partner, lambda));
  const Assignment on{{"t", Rational(0)}};
  if (!(weyl_act(sys, w.inverse(), lambda).evaluate(on) == weyl_act(sys, partner.inverse(), lambda).evaluate(on)))
    return false;
  if (a.order >= 0 && b.order >= 0) return true;
  if (a.order != b.order) return false;
  MonomialSum sum;
  sum.add(a.leading);
  sum.add(b.leading);
  return sum.is_zero();
}

bool h0_cancellation_check(const RootSystem& system, int simple_index, const WeylWord& w) {
  return h0_cancellation_check(WeylGroup(system), system.simple_root(simple_index), w);
}

EntirenessReport entireness_report(const RootSystem& system) {
  const WeylGroup group(system);
  EntirenessReport rep;
  for (const Root& alpha : system.positive_roots()) {
    for (int eps : {-1, 0, 1}) {
      HyperplaneStatus st{alpha, eps, false, 0};
      if (eps == 0) {
        for (const WeylWord& w : group.elements()) {
          ++st.terms_checked;
          if (!h0_cancellation_check(group, alpha, w)) st.pole_survives = true;
        }
      } else {
        const TorusCharacter lambda = hyperplane_character(system, alpha, eps);
        const ZetaExpr l(sharp_polynomial(system, lambda));
        for (const WeylWord& w : group.elements()) {
          ++st.terms_checked;
          if (expand_on_hyperplane(l * sharp_term(group, w, lambda)).order < 0) st.pole_survives = true;
        }
      }
      if (st.pole_survives) rep.entire = false;
      rep.hyperplanes.push_back(st);
    }
  }
  return rep;
}

}  // namespace ecalc
