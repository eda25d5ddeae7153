#pragma once

// Exact integers and rationals. Both are GMP-backed; a Rational built through
// this header is always canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lowrank {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);

/// Largest k with 2^k | n. Throws std::domain_error for n <= 0.
unsigned p2_valuation(const BigInt& n);

/// Nonnegative gcd; gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts an optional leading '-' or '+' followed by decimal digits.
BigInt parse_bigint(std::string_view text);

/// Accepts "a" or "a/b" with a, b as in parse_bigint and b != 0.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

}  // namespace lowrank
