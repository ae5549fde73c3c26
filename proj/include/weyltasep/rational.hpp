#ifndef WEYLTASEP_RATIONAL_HPP
#define WEYLTASEP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace wt {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", or a finite decimal such as "0.5".
Rational parse_rational(const std::string& text);

// Rounded decimal expansion with `digits` places after the point.
std::string to_decimal(const Rational& r, int digits);

// Canonical a/b.
Rational frac(const BigInt& a, const BigInt& b);

BigInt binomial(long n, long k);

// Integer power of a rational; negative exponents invert.
Rational power(const Rational& base, long exponent);

} // namespace wt

#endif
