#include "spaving/ehrhart.hpp"

#include <stdexcept>

namespace spaving {

namespace {

Integer s1(std::int64_t n, std::int64_t m) { return stirling1_unsigned(n, m); }

Integer pow2(int m) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
  return r;
}

// Twice each side, so both are integers.
bool target_holds(int n, int m) {
  const Integer lhs = 2 * (s1(n, m + 1) * (pow2(m) - m - 1) + (n - 1) * s1(n - 1, m + 1));
  const Integer rhs = n * (s1(n - 2, m) + (n - 2) * s1(n - 2, m - 1));
  return lhs >= rhs;
}

bool reduced_holds(int n, int m) { return s1(n, m - 1) <= s1(n, m + 1) * (pow2(m) - m - 2); }

// [n over m+1] / [n over m] >= 2 (1/m - 1/n), cleared of denominators.
bool ratio_holds(int n, int m) {
  return s1(n, m + 1) * m * n >= 2 * (n - m) * s1(n, m);
}

bool ratio_polynomial_holds(int m) {
  const Integer lhs = Integer(m) * m * (m + 1) * (m - 1);
  return lhs <= 4 * (pow2(m) - m - 2);
}

}  // namespace

Polynomial rank2_poly(int n) {
  if (n < 3) throw std::invalid_argument("rank2_poly: need n >= 3");
  return ehr_uniform(2, n) - ehr_minimal_shifted(2, n) * Rational(n / 2);
}

Rational coeff_minimal_shifted_rank2(int n, int m) {
  if (n < 3 || m < 0 || m > n - 1)
    throw std::invalid_argument("coeff_minimal_shifted_rank2: need n >= 3, 0 <= m <= n-1");
  return make_rational(s1(n - 2, m) + (n - 2) * s1(n - 2, m - 1), factorial(n - 1));
}

std::vector<Rank2Violation> rank2_inequality_violations(int n_max) {
  if (n_max > 2000) throw std::invalid_argument("verify_rank2_inequalities: n_max above 2000");
  std::vector<Rank2Violation> out;
  for (int n = 4; n <= n_max; ++n)
    for (int m = 2; m <= n - 1; ++m)
      if (!target_holds(n, m)) out.push_back({"target", n, m});
  for (int n = 12; n <= n_max; ++n)
    for (int m = 3; m <= 12 && m + 1 <= n; ++m)
      if (!reduced_holds(n, m)) out.push_back({"reduced", n, m});
  for (int n = 14; n <= n_max; ++n)
    for (int m = 13; m <= n - 1; ++m)
      if (!ratio_holds(n, m)) out.push_back({"ratio", n, m});
  for (int m = 13; m <= n_max; ++m)
    if (!ratio_polynomial_holds(m)) out.push_back({"ratio-polynomial", 0, m});
  for (int n = 13; n <= n_max; ++n)
    if (!(s1(n, 11) <= 4082 * s1(n, 13))) out.push_back({"reduced-m12", n, 12});
  for (int n = 4; n <= n_max; ++n)
    if (!target_holds(n, 2)) out.push_back({"target-m2", n, 2});
  return out;
}

bool verify_rank2_inequalities(int n_max) { return rank2_inequality_violations(n_max).empty(); }

}  // namespace spaving
