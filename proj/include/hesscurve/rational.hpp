#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hesscurve {

using Integer = mpz_class;
/// GMP keeps mpq_class values canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// "n" or "n/d"; throws Error(ParseError) otherwise. The result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// num/den in lowest terms; den must be nonzero.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exponent);

}  // namespace hesscurve
