#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ecalc/rational.hpp"

namespace ecalc {

using Assignment = std::map<std::string, Rational>;

// constant + sum_p coeffs[p] * p over named formal parameters; zero coefficients are never stored.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(Rational constant);  // NOLINT(google-explicit-constructor): constants promote freely
  AffineForm(int constant) : AffineForm(Rational(constant)) {}

  static AffineForm variable(const std::string& name, const Rational& coeff = 1);
  // Parses forms such as "6s+2", "-s+1/2", "(3/2)s", "x1 - 2*x2 + 1".
  static AffineForm parse(std::string_view text);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const std::string& name) const;
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  // First parameter (in name order) with its coefficient.
  std::optional<std::pair<std::string, Rational>> leading() const;

  AffineForm substitute(const std::map<std::string, AffineForm>& values) const;
  AffineForm evaluate(const Assignment& values) const;

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rational& c);

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rational& c) { return a *= c; }
  friend AffineForm operator*(const Rational& c, AffineForm a) { return a *= c; }
  friend AffineForm operator-(AffineForm a) { return a *= Rational(-1); }

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const AffineForm& a, const AffineForm& b);

  std::string to_string() const;

 private:
  Rational constant_ = 0;
  std::map<std::string, Rational> coeffs_;
};

}  // namespace ecalc
