#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecalc/affine.hpp"
#include "ecalc/root_datum.hpp"

namespace ecalc {

// scalar * prod f^e over non-constant affine factors f, each normalized to leading coefficient 1.
class RationalFunction {
 public:
  RationalFunction(Rational scalar = 1);  // NOLINT(google-explicit-constructor)
  static RationalFunction factor(const AffineForm& f, int exponent = 1);

  const Rational& scalar() const { return scalar_; }
  const std::map<AffineForm, int>& factors() const { return factors_; }
  bool is_zero() const { return scalar_ == 0; }
  bool is_constant() const { return factors_.empty(); }

  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction pow(int e) const;
  RationalFunction substitute(const std::map<std::string, AffineForm>& values) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  void multiply_factor(const AffineForm& f, int exponent);
  Rational scalar_;
  std::map<AffineForm, int> factors_;
};

struct AtomKey {
  FieldLabel label;
  AffineForm arg;
  friend bool operator==(const AtomKey& a, const AtomKey& b) { return a.arg == b.arg && a.label == b.label; }
  friend bool operator<(const AtomKey& a, const AtomKey& b) {
    if (!(a.arg == b.arg)) return a.arg < b.arg;
    return a.label < b.label;
  }
};

struct ZetaAtom {
  FieldLabel label;
  AffineForm arg;
  int exponent = 1;
};

// Representative of {x, 1-x}: positive leading parameter coefficient, or the larger constant.
AffineForm canonical_argument(const AffineForm& x);

struct RenderOptions {
  bool bare_base_residue = true;  // print R_F as "R"
};

// coeff * prod xi_L(arg)^e; xi_L is the completed Dedekind zeta function of L.
class ZetaExpr {
 public:
  ZetaExpr(Rational c = 1) : coeff_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  ZetaExpr(RationalFunction c) : coeff_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  static ZetaExpr xi(const FieldLabel& label, const AffineForm& arg, int exponent = 1);
  // xi_L(x) / xi_L(x+1), the rank-one Gindikin-Karpelevich factor.
  static ZetaExpr gk_ratio(const FieldLabel& label, const AffineForm& x);

  const RationalFunction& coeff() const { return coeff_; }
  const std::map<AtomKey, int>& atoms() const { return atoms_; }
  std::vector<ZetaAtom> atom_list() const;
  int atom_count(bool numerator) const;

  ZetaExpr& operator*=(const ZetaExpr& o);
  ZetaExpr& operator/=(const ZetaExpr& o);
  friend ZetaExpr operator*(ZetaExpr a, const ZetaExpr& b) { return a *= b; }
  friend ZetaExpr operator/(ZetaExpr a, const ZetaExpr& b) { return a /= b; }
  ZetaExpr pow(int e) const;
  ZetaExpr substitute(const std::map<std::string, AffineForm>& values) const;
  // Structural equality; compare canonicalize()d forms for equality as functions.
  friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) {
    return a.coeff_ == b.coeff_ && a.atoms_ == b.atoms_;
  }

  std::string to_string(const RenderOptions& opts = {}) const;
  nlohmann::json to_json() const;

 private:
  void add_atom(const FieldLabel& label, const AffineForm& arg, int exponent);
  RationalFunction coeff_;
  std::map<AtomKey, int> atoms_;
};

ZetaExpr canonicalize(const ZetaExpr& expr);
inline bool equivalent(const ZetaExpr& a, const ZetaExpr& b) { return canonicalize(a) == canonicalize(b); }

// rational * prod xi_L(q)^e * prod R_L^m * prod (affine)^k; R_L = Res_{s=1} xi_L(s).
struct Monomial {
  Rational coeff = 1;
  std::map<AtomKey, int> values;
  std::map<FieldLabel, int> residues;
  std::map<AffineForm, int> polys;

  Monomial shape() const;  // same symbols, coefficient 1
  bool is_zero() const { return coeff == 0; }
  Monomial& operator*=(const Monomial& o);
  Monomial& operator/=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
  Monomial pow(int e) const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.values == b.values && a.residues == b.residues && a.polys == b.polys;
  }
  // Orders by symbols only (coefficient ignored), for grouping.
  friend bool shape_less(const Monomial& a, const Monomial& b);

  static Monomial residue(const FieldLabel& label, int power = 1);
  static Monomial xi_value(const FieldLabel& label, const Rational& q, int power = 1);

  std::string to_string(const RenderOptions& opts = {}) const;
  nlohmann::json to_json() const;
};

struct ShapeLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return shape_less(a, b); }
};

// Formal sum of monomials with like terms combined.
class MonomialSum {
 public:
  void add(const Monomial& m);
  bool is_zero() const { return terms_.empty(); }
  std::vector<Monomial> terms() const;
  std::string to_string(const RenderOptions& opts = {}) const;

 private:
  std::map<Monomial, Rational, ShapeLess> terms_;
};

struct LaurentData {
  int order = 0;  // order of vanishing; negative means a pole
  Monomial leading;
};

// Expand in `variable` around `value`; parameters in `fixed` are substituted first and every
// other parameter stays generic.
struct ExpansionPoint {
  std::string variable = "s";
  Rational value;
  Assignment fixed;
};

struct EvalOptions {
  bool assume_no_real_zeros = false;
};

LaurentData leading_coeff_at(const ZetaExpr& expr, const ExpansionPoint& point, const EvalOptions& opts = {});
int order_at(const ZetaExpr& expr, const ExpansionPoint& point, const EvalOptions& opts = {});

}  // namespace ecalc
