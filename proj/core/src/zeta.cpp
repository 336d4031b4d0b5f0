#include "ecalc/zeta.hpp"

#include <nlohmann/json.hpp>

#include "ecalc/error.hpp"

namespace ecalc {

namespace {

std::string power_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& x : items) out += (out.empty() ? "" : "*") + x;
  return out;
}

// sign * prod(num) / prod(den), scalar parts already included in num/den.
std::string render_fraction(bool negative, const std::vector<std::string>& num, const std::vector<std::string>& den) {
  std::string out = negative ? "-" : "";
  out += num.empty() ? "1" : join(num);
  if (!den.empty()) out += "/" + (den.size() > 1 ? "(" + join(den) + ")" : den.front());
  return out;
}

void split_scalar(const Rational& q, bool& negative, std::vector<std::string>& num, std::vector<std::string>& den) {
  negative = q < 0;
  mpz_class n = abs(q.get_num());
  if (n != 1) num.insert(num.begin(), n.get_str());
  if (q.get_den() != 1) den.insert(den.begin(), q.get_den().get_str());
}

nlohmann::json form_json(const AffineForm& f) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, v] : f.coeffs()) coeffs[k] = v.get_str();
  return {{"const", f.constant().get_str()}, {"coeffs", coeffs}};
}

std::string xi_text(const AtomKey& key) { return "xi_" + key.label.symbol + "(" + key.arg.to_string() + ")"; }

std::string residue_text(const FieldLabel& label, const RenderOptions& opts) {
  return (opts.bare_base_residue && label.symbol == "F") ? "R" : "R_" + label.symbol;
}

template <class Map>
void bump(Map& m, const typename Map::key_type& k, int e) {
  if (e == 0) return;
  int& slot = m[k];
  slot += e;
  if (slot == 0) m.erase(k);
}

// f = k * n with n having leading coefficient 1.
std::pair<Rational, AffineForm> normalize(const AffineForm& f) {
  Rational k = f.leading()->second;
  return {k, f * Rational(1 / k)};
}

}  // namespace

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Rational scalar) : scalar_(std::move(scalar)) {}

RationalFunction RationalFunction::factor(const AffineForm& f, int exponent) {
  RationalFunction r;
  r.multiply_factor(f, exponent);
  return r;
}

void RationalFunction::multiply_factor(const AffineForm& f, int exponent) {
  if (exponent == 0 || is_zero()) return;
  if (f.is_constant()) {
    if (f.constant() == 0) {
      if (exponent < 0) throw CalcError(ErrorCode::DegenerateArgument, "division by an identically zero factor");
      scalar_ = 0;
      factors_.clear();
      return;
    }
    scalar_ *= ecalc::pow(f.constant(), exponent);
    return;
  }
  auto [k, n] = normalize(f);
  scalar_ *= ecalc::pow(k, exponent);
  bump(factors_, n, exponent);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (o.is_zero()) {
    scalar_ = 0;
    factors_.clear();
    return *this;
  }
  if (is_zero()) return *this;
  scalar_ *= o.scalar_;
  for (const auto& [f, e] : o.factors_) bump(factors_, f, e);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw CalcError(ErrorCode::DegenerateArgument, "division by zero");
  return *this *= o.pow(-1);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0 && is_zero()) throw CalcError(ErrorCode::DegenerateArgument, "division by zero");
  RationalFunction r(ecalc::pow(scalar_, e));
  if (e == 0) return r;
  for (const auto& [f, k] : factors_) r.factors_[f] = k * e;
  return r;
}

RationalFunction RationalFunction::substitute(const std::map<std::string, AffineForm>& values) const {
  RationalFunction r(scalar_);
  for (const auto& [f, e] : factors_) r.multiply_factor(f.substitute(values), e);
  return r;
}

std::string RationalFunction::to_string() const {
  bool neg = false;
  std::vector<std::string> num, den;
  for (const auto& [f, e] : factors_)
    (e > 0 ? num : den).push_back("(" + f.to_string() + ")" + power_suffix(e > 0 ? e : -e));
  split_scalar(scalar_, neg, num, den);
  return render_fraction(neg, num, den);
}

// ---------------------------------------------------------------- ZetaExpr

AffineForm canonical_argument(const AffineForm& x) {
  AffineForm dual = AffineForm(1) - x;
  if (auto lead = x.leading()) return lead->second > 0 ? x : dual;
  return x.constant() >= dual.constant() ? x : dual;
}

ZetaExpr ZetaExpr::xi(const FieldLabel& label, const AffineForm& arg, int exponent) {
  ZetaExpr z;
  z.add_atom(label, arg, exponent);
  return z;
}

ZetaExpr ZetaExpr::gk_ratio(const FieldLabel& label, const AffineForm& x) {
  ZetaExpr z;
  z.add_atom(label, x, 1);
  z.add_atom(label, x + AffineForm(1), -1);
  return z;
}

void ZetaExpr::add_atom(const FieldLabel& label, const AffineForm& arg, int exponent) {
  bump(atoms_, AtomKey{label, arg}, exponent);
}

std::vector<ZetaAtom> ZetaExpr::atom_list() const {
  std::vector<ZetaAtom> out;
  for (const auto& [k, e] : atoms_) out.push_back({k.label, k.arg, e});
  return out;
}

int ZetaExpr::atom_count(bool numerator) const {
  int n = 0;
  for (const auto& [k, e] : atoms_)
    if ((e > 0) == numerator) n += e > 0 ? e : -e;
  return n;
}

ZetaExpr& ZetaExpr::operator*=(const ZetaExpr& o) {
  coeff_ *= o.coeff_;
  for (const auto& [k, e] : o.atoms_) bump(atoms_, k, e);
  return *this;
}

ZetaExpr& ZetaExpr::operator/=(const ZetaExpr& o) { return *this *= o.pow(-1); }

ZetaExpr ZetaExpr::pow(int e) const {
  ZetaExpr z(coeff_.pow(e));
  if (e == 0) return z;
  for (const auto& [k, x] : atoms_) z.atoms_[k] = x * e;
  return z;
}

ZetaExpr ZetaExpr::substitute(const std::map<std::string, AffineForm>& values) const {
  ZetaExpr z(coeff_.substitute(values));
  for (const auto& [k, e] : atoms_) z.add_atom(k.label, k.arg.substitute(values), e);
  return z;
}

ZetaExpr canonicalize(const ZetaExpr& expr) {
  ZetaExpr z(expr.coeff());
  for (const auto& [k, e] : expr.atoms()) z *= ZetaExpr::xi(k.label, canonical_argument(k.arg), e);
  return z;
}

std::string ZetaExpr::to_string(const RenderOptions&) const {
  bool neg = false;
  std::vector<std::string> num, den;
  for (const auto& [f, e] : coeff_.factors())
    (e > 0 ? num : den).push_back("(" + f.to_string() + ")" + power_suffix(e > 0 ? e : -e));
  for (const auto& [k, e] : atoms_) (e > 0 ? num : den).push_back(xi_text(k) + power_suffix(e > 0 ? e : -e));
  split_scalar(coeff_.scalar(), neg, num, den);
  return render_fraction(neg, num, den);
}

nlohmann::json ZetaExpr::to_json() const {
  nlohmann::json factors = nlohmann::json::array(), atoms = nlohmann::json::array();
  for (const auto& [f, e] : coeff_.factors()) factors.push_back({{"form", form_json(f)}, {"exp", e}});
  for (const auto& [k, e] : atoms_)
    atoms.push_back({{"label", k.label.symbol}, {"degree", k.label.degree}, {"arg", form_json(k.arg)}, {"exp", e}});
  return {{"coeff", {{"scalar", coeff_.scalar().get_str()}, {"factors", factors}}},
          {"atoms", atoms},
          {"text", to_string()}};
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::shape() const {
  Monomial m = *this;
  m.coeff = 1;
  return m;
}

bool shape_less(const Monomial& a, const Monomial& b) {
  if (a.residues != b.residues) return a.residues < b.residues;
  if (a.values != b.values) return a.values < b.values;
  return a.polys < b.polys;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  coeff *= o.coeff;
  for (const auto& [k, e] : o.values) bump(values, k, e);
  for (const auto& [k, e] : o.residues) bump(residues, k, e);
  for (const auto& [k, e] : o.polys) bump(polys, k, e);
  return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) { return *this *= o.pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial m;
  m.coeff = ecalc::pow(coeff, e);
  if (e == 0) return m;
  for (const auto& [k, x] : values) m.values[k] = x * e;
  for (const auto& [k, x] : residues) m.residues[k] = x * e;
  for (const auto& [k, x] : polys) m.polys[k] = x * e;
  return m;
}

Monomial Monomial::residue(const FieldLabel& label, int power) {
  Monomial m;
  bump(m.residues, label, power);
  return m;
}

Monomial Monomial::xi_value(const FieldLabel& label, const Rational& q, int power) {
  Monomial m;
  bump(m.values, AtomKey{label, canonical_argument(AffineForm(q))}, power);
  return m;
}

std::string Monomial::to_string(const RenderOptions& opts) const {
  if (coeff == 0) return "0";
  bool neg = false;
  std::vector<std::string> num, den;
  for (const auto& [k, e] : residues) (e > 0 ? num : den).push_back(residue_text(k, opts) + power_suffix(e > 0 ? e : -e));
  for (const auto& [k, e] : values) (e > 0 ? num : den).push_back(xi_text(k) + power_suffix(e > 0 ? e : -e));
  for (const auto& [f, e] : polys)
    (e > 0 ? num : den).push_back("(" + f.to_string() + ")" + power_suffix(e > 0 ? e : -e));
  split_scalar(coeff, neg, num, den);
  return render_fraction(neg, num, den);
}

nlohmann::json Monomial::to_json() const {
  nlohmann::json vals = nlohmann::json::array(), res = nlohmann::json::array(), polys_j = nlohmann::json::array();
  for (const auto& [k, e] : values)
    vals.push_back({{"label", k.label.symbol}, {"arg", form_json(k.arg)}, {"exp", e}});
  for (const auto& [k, e] : residues) res.push_back({{"label", k.symbol}, {"exp", e}});
  for (const auto& [f, e] : polys) polys_j.push_back({{"form", form_json(f)}, {"exp", e}});
  return {{"coeff", coeff.get_str()},
          {"xi_values", vals},
          {"residues", res},
          {"polynomials", polys_j},
          {"text", to_string({false})}};
}

void MonomialSum::add(const Monomial& m) {
  if (m.coeff == 0) return;
  Monomial key = m.shape();
  Rational& slot = terms_[key];
  slot += m.coeff;
  if (slot == 0) terms_.erase(key);
}

std::vector<Monomial> MonomialSum::terms() const {
  std::vector<Monomial> out;
  for (const auto& [shape, c] : terms_) {
    Monomial m = shape;
    m.coeff = c;
    out.push_back(m);
  }
  return out;
}

std::string MonomialSum::to_string(const RenderOptions& opts) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms()) {
    std::string t = m.to_string(opts);
    if (out.empty())
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

// ---------------------------------------------------------------- Laurent analysis

LaurentData leading_coeff_at(const ZetaExpr& expr, const ExpansionPoint& point, const EvalOptions& opts) {
  LaurentData out;
  out.leading.coeff = expr.coeff().scalar();
  if (out.leading.coeff == 0) throw CalcError(ErrorCode::DegenerateArgument, "expression is identically zero");
  const Assignment at{{point.variable, point.value}};

  for (const auto& [f, e] : expr.coeff().factors()) {
    const AffineForm g = f.evaluate(point.fixed);
    const Rational a = g.coeff(point.variable);
    const AffineForm c = g.evaluate(at);
    if (!c.is_constant()) {
      auto [k, n] = normalize(c);
      out.leading.coeff *= ecalc::pow(k, e);
      bump(out.leading.polys, n, e);
    } else if (c.constant() != 0) {
      out.leading.coeff *= ecalc::pow(c.constant(), e);
    } else if (a != 0) {
      out.order += e;
      out.leading.coeff *= ecalc::pow(a, e);
    } else {
      throw CalcError(ErrorCode::DegenerateArgument, "factor " + f.to_string() + " vanishes identically");
    }
  }

  for (const auto& [key, e] : expr.atoms()) {
    const AffineForm g = key.arg.evaluate(point.fixed);
    const Rational a = g.coeff(point.variable);
    const AffineForm c = g.evaluate(at);
    if (!c.is_constant()) {
      bump(out.leading.values, AtomKey{key.label, canonical_argument(c)}, e);
      continue;
    }
    const Rational& q = c.constant();
    if (q == 0 || q == 1) {
      if (a == 0)
        throw CalcError(ErrorCode::DegenerateArgument,
                        "xi_" + key.label.symbol + "(" + key.arg.to_string() + ") sits at a pole identically");
      // xi(1 + a eps) ~ R/(a eps), xi(a eps) ~ -R/(a eps)
      out.order -= e;
      bump(out.leading.residues, key.label, e);
      out.leading.coeff *= ecalc::pow(Rational((q == 1 ? 1 : -1) / a), e);
      continue;
    }
    if (q > 0 && q < 1 && !opts.assume_no_real_zeros)
      throw CalcError(ErrorCode::IndeterminateZeroRegion,
                      "xi_" + key.label.symbol + "(" + q.get_str() + ") may vanish (argument inside (0,1))");
    bump(out.leading.values, AtomKey{key.label, canonical_argument(c)}, e);
  }
  return out;
}

int order_at(const ZetaExpr& expr, const ExpansionPoint& point, const EvalOptions& opts) {
  return leading_coeff_at(expr, point, opts).order;
}

}  // namespace ecalc
