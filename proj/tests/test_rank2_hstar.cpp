#include "spaving/codes.hpp"
#include "spaving/ehrhart.hpp"

#include <doctest.h>

using namespace spaving;

TEST_CASE("rank-2 polynomials") {
  CHECK(rank2_poly(3) == Polynomial({1, 1}));
  CHECK(has_positive_coefficients(rank2_poly(4)));
  CHECK(has_positive_coefficients(rank2_poly(100)));
  for (int n = 3; n <= 40; ++n)
    REQUIRE(rank2_poly(n) == ehr_sparse(n, 2, n / 2));
  CHECK_THROWS_AS(rank2_poly(2), std::invalid_argument);
}

TEST_CASE("rank-2 increment coefficients") {
  CHECK(coeff_minimal_shifted_rank2(3, 0) == 0);
  for (int n = 3; n <= 30; ++n) {
    const Polynomial s = ehr_minimal_shifted(2, n);
    for (int m = 0; m <= n - 1; ++m) REQUIRE(coeff_minimal_shifted_rank2(n, m) == s.coefficient(m));
  }
  CHECK_THROWS_AS(coeff_minimal_shifted_rank2(6, 6), std::invalid_argument);
}

TEST_CASE("rank-2 Stirling inequalities") {
  CHECK(verify_rank2_inequalities(50));
  CHECK(rank2_inequality_violations(100).empty());
  CHECK_THROWS_AS(verify_rank2_inequalities(5000), std::invalid_argument);
}

TEST_CASE("hstar") {
  CHECK(hstar(binom_poly(2, 2), 2) == std::vector<Rational>{1, 0, 0});
  const Polynomial oct = ehr_uniform(2, 4);
  const auto h = hstar(oct, 3);
  Rational sum = 0;
  for (const auto& x : h) {
    CHECK(is_integer(x));
    CHECK(x >= 0);
    sum += x;
  }
  CHECK(sum == Rational(6) * oct.coefficient(3));
  CHECK_THROWS_WITH_AS(hstar(oct, 4), "dimension mismatch", std::invalid_argument);

  const auto golden = hstar(ehr_sparse(20, 9, 8398), 19);
  REQUIRE(golden.size() == 20);
  CHECK(golden[0] == 1);
  for (const auto& x : golden) CHECK((is_integer(x) && x >= 0));
  CHECK(is_real_rooted(golden));
}

TEST_CASE("hstar boundary entries") {
  // h*_1 = p(1) - (d+1), h*_d = interior points of P, sum = d! * leading coefficient
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; k < n; ++k) {
      const Polynomial p = ehr_sparse(n, k, gs_lower_bound(n, k));
      const int d = p.degree();
      const auto h = hstar(p, d);
      Rational sum = 0;
      for (const auto& x : h) sum += x;
      REQUIRE(sum == Rational(factorial(d)) * p.coefficient(d));
      if (d >= 1) REQUIRE(h[1] == p(1) - (d + 1));
      REQUIRE(h[d] == ((d % 2) ? -p(-1) : p(-1)));
    }
}

TEST_CASE("real-rootedness") {
  CHECK(is_real_rooted({1, 2, 1}));
  CHECK_FALSE(is_real_rooted({1, 0, 1}));
  CHECK(is_real_rooted({5}));
  CHECK(is_real_rooted({0, 0, 1}));
  CHECK(is_real_rooted({-6, 11, -6, 1}));  // (z-1)(z-2)(z-3)
  CHECK_FALSE(is_real_rooted({1, 0, 0, 1}));
  CHECK_THROWS_AS(is_real_rooted({0, 0}), std::invalid_argument);
  CHECK(count_distinct_real_roots(Polynomial({-6, 11, -6, 1})) == 3);
  CHECK(count_distinct_real_roots(Polynomial({1, 2, 1})) == 1);
}
