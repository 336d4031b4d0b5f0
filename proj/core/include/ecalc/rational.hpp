#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ecalc {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; throws CalcError(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// q^e for integer e (q must be nonzero when e < 0).
Rational pow(const Rational& q, int e);

}  // namespace ecalc
