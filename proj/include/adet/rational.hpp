#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adet {

/// Exact rational number. GMP keeps every value canonical (reduced, positive
/// denominator, zero as 0/1) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// C(x, j) = x(x-1)...(x-j+1)/j! for any rational x; 0 when j < 0.
Rational binomial(const Rational& x, long j);

/// Rising factorial (a)_j = a(a+1)...(a+j-1).
Rational pochhammer(const Rational& a, long j);

Integer factorial(unsigned long m);

} // namespace adet
