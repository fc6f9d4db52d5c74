#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mcclab {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k) with the combinatorial convention C(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Saturating C(n, k) for work estimates; returns UINT64_MAX on overflow.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

BigInt factorial(unsigned n);

// num/den in lowest terms with a positive denominator.
Rational fraction(const BigInt& num, const BigInt& den);

BigInt power(const BigInt& base, unsigned long exponent);

// Canonical reduced rational from "p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

} // namespace mcclab
