#include "mcclab/bigint.hpp"

#include "mcclab/errors.hpp"

#include <cctype>
#include <limits>

namespace mcclab {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

Rational fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return DomainError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto dot = text.find('.');
  Rational out;
  try {
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const auto frac_len = text.size() - dot - 1;
      if (frac_len == 0 || text.find('/') != std::string::npos) throw bad();
      for (std::size_t i = dot + 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
      out = Rational(BigInt(digits, 10), power(10, frac_len));
    } else {
      out = Rational(text, 10);
    }
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  if (out.get_den() == 0) throw bad();
  out.canonicalize();
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace mcclab
