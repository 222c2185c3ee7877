#pragma once

// Exact scalars. Int and Rat are GMP's mpz_class / mpq_class; a Rat is kept
// canonical at all times (den > 0, gcd(num, den) = 1, zero is 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace purerec {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws "zero-denominator" when den == 0.
Rat rat_canon(const Int& num, const Int& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Decimal text: "p" for integers, "p/q" otherwise.
std::string to_string(const Int& v);
std::string to_string(const Rat& q);

/// Parses "p", "-p", "p/q" (no whitespace). Throws on malformed text.
Rat parse_rat(std::string_view text);

/// Returns c^e when it is rational; throws "non-rational-leading-value"
/// otherwise (e.g. 2^(1/3)). c must be nonzero.
Rat rational_power(const Rat& c, const Rat& e);

/// Least common multiple of the denominators of `values` (1 for empty input).
Int common_denominator(std::span<const Rat> values);

/// Number of decimal digits of |v|. Throws for v == 0.
std::size_t digit_count(const Int& v);

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Bit length of numerator plus denominator; a cheap size measure for pivoting.
inline std::size_t bit_size(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace purerec
