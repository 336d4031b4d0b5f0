#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecalc/ecalc.hpp"

namespace ecalc::testing {

inline const FieldLabel F = FieldLabel::F();
inline const FieldLabel K = FieldLabel::K();
inline const FieldLabel E = FieldLabel::E();

using XiList = std::vector<std::pair<FieldLabel, std::string>>;

// prod xi_L(arg) over `num` divided by the same over `den`; args are affine forms like "6s+2".
inline ZetaExpr xi_ratio(const XiList& num, const XiList& den = {}) {
  ZetaExpr out(1);
  for (const auto& [l, a] : num) out *= ZetaExpr::xi(l, AffineForm::parse(a));
  for (const auto& [l, a] : den) out /= ZetaExpr::xi(l, AffineForm::parse(a));
  return out;
}

inline std::vector<Rational> vec(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Monomial R(const FieldLabel& l = F, int power = 1) { return Monomial::residue(l, power); }
inline Monomial xiv(const FieldLabel& l, long q, int power = 1) { return Monomial::xi_value(l, Rational(q), power); }
inline Monomial scalar(const Rational& c) {
  Monomial m;
  m.coeff = c;
  return m;
}

inline int pole_order_of(const ZetaExpr& j, const Rational& point) { return -order_at(j, {"s", point, {}}); }

}  // namespace ecalc::testing
