#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tg {

// Always canonical: gmpxx keeps arithmetic results reduced, and the helpers
// below canonicalize anything built from a raw numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

} // namespace tg
