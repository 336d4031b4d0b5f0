#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecalc/affine.hpp"

namespace ecalc {

struct ShellFunction {
  enum class Kind { Lattice, Shell };
  Kind kind = Kind::Lattice;
  int k = 0;

  static ShellFunction lattice(int k) { return {Kind::Lattice, k}; }  // 1 on varpi^k O
  static ShellFunction shell(int k) { return {Kind::Shell, k}; }      // 1 on valuation exactly k
};

// Ratio of Laurent polynomials in the formal symbol X = q^{-z}.
class XRational {
 public:
  XRational() = default;
  XRational(std::map<int, Rational> num, std::map<int, Rational> den);
  static XRational monomial(int power, const Rational& c = 1);

  const std::map<int, Rational>& numerator() const { return num_; }
  const std::map<int, Rational>& denominator() const { return den_; }

  friend XRational operator+(const XRational& a, const XRational& b);
  friend XRational operator-(const XRational& a, const XRational& b);
  friend XRational operator*(const XRational& a, const XRational& b);
  // Equality as rational functions (cross multiplication).
  friend bool operator==(const XRational& a, const XRational& b);

  // Coefficients of X^0 .. X^{n-1} of the power series (requires den(0) != 0, no negative powers).
  std::vector<Rational> series(int n) const;
  std::string to_string() const;

 private:
  std::map<int, Rational> num_{{0, Rational(1)}};
  std::map<int, Rational> den_{{0, Rational(1)}};
};

struct TateResult {
  XRational value;  // in X = q^{-z}
  AffineForm z;
  std::string convergence = "Re(z) > 0";
  std::string measure = "vol(O^x) = 1";

  bool is_local_zeta() const;   // value == 1/(1-X)
  std::string to_string() const;  // e.g. "1/(1-X), X = q^{-(2s+3)}  [= zeta_v(2s+3)]"
  nlohmann::json to_json() const;
};

// int_{F^x} |t|^z f(t) d^x t as a formal identity in X = q^{-z}.
TateResult tate_integral(const ShellFunction& f, const AffineForm& z);

}  // namespace ecalc
