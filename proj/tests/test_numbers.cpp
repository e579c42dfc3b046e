#include "spaving/numbers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace spaving;

namespace {

// Permutations of {0..n-1} by cycle count, by listing them all.
std::vector<long> cycle_counts(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> counts(n + 1, 0);
  do {
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    ++counts[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(20, 9) == 167960);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, 2) == 0);
  CHECK(binomial(300, 150) == Integer("93759702772827452793193754439064084879232655700081358920472352712975170021839591675861424"));
}

TEST_CASE("binomial satisfies Pascal's rule across the memo boundary") {
  for (int n = 1; n <= 260; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == Integer(binomial(n - 1, k - 1) + binomial(n - 1, k)));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("stirling numbers against permutation cycle counts") {
  CHECK(stirling1_unsigned(3, 2) == 3);
  CHECK(stirling1_unsigned(4, 1) == 6);
  for (int n = 0; n <= 30; ++n) CHECK(stirling1_unsigned(n, n) == 1);
  CHECK(stirling1_unsigned(0, 0) == 1);
  CHECK(stirling1_unsigned(3, 0) == 0);
  CHECK(stirling1_unsigned(3, 4) == 0);
  for (int n = 1; n <= 8; ++n) {
    const auto counts = cycle_counts(n);
    for (int m = 0; m <= n; ++m) CHECK(stirling1_unsigned(n, m) == counts[m]);
  }
}

TEST_CASE("stirling recurrence, row sums and log-concavity") {
  for (int n = 1; n <= 80; ++n) {
    Integer row = 0;
    for (int m = 1; m <= n; ++m) {
      REQUIRE(stirling1_unsigned(n, m) ==
              Integer(stirling1_unsigned(n - 1, m - 1) + (n - 1) * stirling1_unsigned(n - 1, m)));
      row += stirling1_unsigned(n, m);
    }
    REQUIRE(row == factorial(n));
  }
  for (int n = 2; n <= 60; ++n)
    for (int m = 2; m < n; ++m) {
      const Integer mid = stirling1_unsigned(n, m);
      REQUIRE(mid * mid >= stirling1_unsigned(n, m - 1) * stirling1_unsigned(n, m + 1));
    }
}

TEST_CASE("harmonic sums by direct summation") {
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(0) == 0);
  CHECK(harmonic2(2) == Rational(5, 4));
  Rational h = 0, h2 = 0;
  for (int i = 1; i <= 200; ++i) {
    h += Rational(1, i);
    h2 += Rational(1, i * i);
    REQUIRE(harmonic(i) == h);
    REQUIRE(harmonic2(i) == h2);
  }
}

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_display_string(Rational(3)) == "3");
  CHECK(to_fraction_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("-142179543511/15437822400") == make_rational(Integer(-142179543511L), Integer(15437822400L)));
  CHECK(parse_rational("4/2") == 2);
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(is_integer(make_rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
  CHECK_THROWS(make_rational(1, 0));
}
