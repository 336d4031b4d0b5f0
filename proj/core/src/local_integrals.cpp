#include "ecalc/local_integrals.hpp"

#include <nlohmann/json.hpp>

#include "ecalc/error.hpp"

namespace ecalc {

namespace {

using Poly = std::map<int, Rational>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly add(const Poly& a, const Poly& b, const Rational& sign) {
  Poly out = a;
  for (const auto& [i, y] : b) out[i] += sign * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string poly_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : p) {
    std::string mono = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
    Rational mag = abs(c);
    std::string coeff = (mag == 1 && !mono.empty()) ? "" : mag.get_str();
    std::string term = coeff + (coeff.empty() || mono.empty() ? "" : "*") + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

}  // namespace

XRational::XRational(std::map<int, Rational> num, std::map<int, Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.empty()) throw CalcError(ErrorCode::InvalidInput, "zero denominator");
}

XRational XRational::monomial(int power, const Rational& c) { return XRational({{power, c}}, {{0, Rational(1)}}); }

XRational operator+(const XRational& a, const XRational& b) {
  if (a.den_ == b.den_) return XRational(add(a.num_, b.num_, 1), a.den_);
  return XRational(add(mul(a.num_, b.den_), mul(b.num_, a.den_), 1), mul(a.den_, b.den_));
}

XRational operator-(const XRational& a, const XRational& b) {
  if (a.den_ == b.den_) return XRational(add(a.num_, b.num_, -1), a.den_);
  return XRational(add(mul(a.num_, b.den_), mul(b.num_, a.den_), -1), mul(a.den_, b.den_));
}

XRational operator*(const XRational& a, const XRational& b) {
  return XRational(mul(a.num_, b.num_), mul(a.den_, b.den_));
}

bool operator==(const XRational& a, const XRational& b) { return mul(a.num_, b.den_) == mul(b.num_, a.den_); }

std::vector<Rational> XRational::series(int n) const {
  const bool negative_powers = (!num_.empty() && num_.begin()->first < 0) || den_.begin()->first < 0;
  if (!den_.count(0) || negative_powers)
    throw CalcError(ErrorCode::InvalidInput, "not a power series in X");
  const Rational d0 = den_.at(0);
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    Rational c = num_.count(i) ? num_.at(i) : Rational(0);
    for (const auto& [j, d] : den_)
      if (j > 0 && j <= i) c -= d * out[i - j];
    out[i] = c / d0;
  }
  return out;
}

std::string XRational::to_string() const {
  if (den_ == Poly{{0, Rational(1)}}) return poly_text(num_);
  std::string n = poly_text(num_);
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + poly_text(den_) + ")";
}

bool TateResult::is_local_zeta() const { return value == XRational({{0, Rational(1)}}, {{0, Rational(1)}, {1, Rational(-1)}}); }

std::string TateResult::to_string() const {
  std::string out = value.to_string() + ", X = q^{-(" + z.to_string() + ")}";
  if (is_local_zeta()) out += "  [= zeta_v(" + z.to_string() + ")]";
  return out;
}

nlohmann::json TateResult::to_json() const {
  nlohmann::json num = nlohmann::json::object(), den = nlohmann::json::object();
  for (const auto& [i, c] : value.numerator()) num[std::to_string(i)] = c.get_str();
  for (const auto& [i, c] : value.denominator()) den[std::to_string(i)] = c.get_str();
  return {{"symbol", "X = q^{-z}"},
          {"z", z.to_string()},
          {"numerator", num},
          {"denominator", den},
          {"text", to_string()},
          {"local_zeta", is_local_zeta()},
          {"convergence", convergence},
          {"measure", measure}};
}

TateResult tate_integral(const ShellFunction& f, const AffineForm& z) {
  TateResult r;
  r.z = z;
  // |t|^z on valuation k contributes q^{-kz} = X^k times vol(O^x) = 1.
  if (f.kind == ShellFunction::Kind::Shell)
    r.value = XRational::monomial(f.k);
  else
    r.value = XRational({{f.k, Rational(1)}}, {{0, Rational(1)}, {1, Rational(-1)}});
  return r;
}

}  // namespace ecalc
