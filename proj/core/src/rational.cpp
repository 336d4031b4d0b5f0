#include "ecalc/rational.hpp"

#include <cctype>

#include "ecalc/error.hpp"

namespace ecalc {

namespace {

const char* const kCodeNames[] = {
    "invalid-input",           "not-finite-type",    "label-inconsistency",
    "unknown-root",            "unsupported-group",  "iota-mismatch",
    "indeterminate-zero-region", "degenerate-argument", "needs-higher-log-order",
    "hyperplane-degeneracy",   "unmodeled-point",
};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

const char* error_code_name(ErrorCode code) { return kCodeNames[static_cast<int>(code)]; }

CalcError::CalcError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw CalcError(ErrorCode::InvalidInput, "not a rational: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw CalcError(ErrorCode::InvalidInput, "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& q, int e) {
  Rational base = e < 0 ? Rational(1 / q) : q;
  Rational out = 1;
  for (int k = e < 0 ? -e : e; k > 0; --k) out *= base;
  return out;
}

}  // namespace ecalc
