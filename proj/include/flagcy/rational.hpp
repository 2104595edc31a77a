#ifndef FLAGCY_RATIONAL_HPP
#define FLAGCY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flagcy
{

/// Exact arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals; an empty string yields an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact n! as a rational.
Rational factorial(std::size_t n);

/// Exact integer power, negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long exponent);

} // namespace flagcy

#endif
