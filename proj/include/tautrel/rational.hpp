#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tautrel {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" form, q > 0 and gcd(p, q) = 1. Integers keep the "/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Integer binomial(int n, int k);

/// Power with an integer exponent; negative exponents invert.
Rational power(const Rational& base, int exponent);

/// Scales a rational vector to the primitive integer vector on the same
/// line whose first nonzero entry is positive. The zero vector maps to zeros.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

}  // namespace tautrel
