#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace airycoef {

using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps it canonical (reduced, positive
/// denominator, zero as 0/1) as long as it is built through make_rational().
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZeroError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p" or "p/q" (optional sign). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace airycoef
