#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polytile {

// All plane coordinates are exact rationals backed by GMP. mpq_class keeps
// values in lowest terms with a positive denominator, which is exactly the
// canonical form the library relies on everywhere.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms; throws SyntaxError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "-12", "7/3", "-7/3". No whitespace, no decimals, no leading '+'.
Rational parse_rational(std::string_view text);

// "p" when integral, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

// Exact conversion; throws ValidationError when the value does not fit.
long long to_int64(const Integer& value);
long long rational_to_int64(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }

// gmpxx has no long long constructor; long is 64-bit on every target we build.
inline Rational rat_of(long long v) { return Rational(static_cast<long>(v)); }

} // namespace polytile
