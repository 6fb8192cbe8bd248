#pragma once

// Exact integer / rational scalars.  Thin layer over GMP's C++ classes: mpz_class
// and mpq_class already give exact arithmetic with canonical forms (gcd-reduced,
// positive denominator) as long as values are built through the helpers below.

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tg/errors.hpp"

namespace tg {

using Integer = mpz_class;
using Rational = mpq_class;

// p-adic valuation of 0 (and the "no finite valuation" marker in general).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

// q as an exact fraction, gcd(num, den) = 1, den > 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "num/den" or "num" (optional sign, arbitrary length).  Throws ArgumentError
// on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

// Inverse of rational_from_string: "num/den", with "/den" omitted when den = 1.
std::string rational_to_string(const Rational& q);
std::string integer_to_string(const Integer& n);

// Exponent of p in q.  valuation_p(0, p) = kValInfinity.  Throws ArgumentError when
// p is not a (positive) prime.
long valuation_p(const Rational& q, const Integer& p);
long valuation_p(const Integer& n, const Integer& p);

// The nonnegative square root when q is a perfect square of a rational, else nullopt.
std::optional<Rational> is_square(const Rational& q);
std::optional<Integer> is_square(const Integer& n);

bool is_prime(const Integer& n);

// All primes <= bound, ascending.  Plain sieve; bound is capped only by memory.
std::vector<long> primes_up_to(long bound);

// gcd/lcm on the numerators-and-denominators level are not needed; these work on
// integers only.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

}  // namespace tg
