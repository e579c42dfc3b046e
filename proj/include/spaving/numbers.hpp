// Exact integers, rationals and the combinatorial number families used
// throughout the library.

#ifndef SPAVING_NUMBERS_HPP
#define SPAVING_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spaving {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction. Values produced by this library are always
/// canonical: positive denominator, numerator and denominator coprime.
using Rational = mpq_class;

/// Builds the canonical fraction num/den. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" with the denominator always written, e.g. "3/1".
std::string to_fraction_string(const Rational& q);

/// "p/q", or just "p" when q == 1.
std::string to_display_string(const Rational& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// C(n, k) for 0 <= k <= n, and 0 for every other (n, k).
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

/// Unsigned Stirling number of the first kind: permutations of n elements
/// with exactly m cycles. Zero outside 0 <= m <= n.
///
/// Values are memoized column by column, so asking for a small m at a large
/// n only materializes columns 0..m up to row n. The cache is shared and
/// guarded; concurrent callers are safe.
Integer stirling1_unsigned(std::int64_t n, std::int64_t m);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(std::int64_t n);

/// H_n^(2) = 1 + 1/4 + ... + 1/n^2, with H_0^(2) = 0.
Rational harmonic2(std::int64_t n);

}  // namespace spaving

#endif  // SPAVING_NUMBERS_HPP
