#include "spaving/codes.hpp"
#include "spaving/ehrhart.hpp"
#include "spaving/oracle.hpp"

#include <doctest.h>

using namespace spaving;

namespace {

SubsetMask w(const char* word) { return SubsetMask::from_word(word); }

}  // namespace

TEST_CASE("oracle counts") {
  const auto u23 = SparsePavingMatroid::uniform(3, 2);
  CHECK(oracle_count(u23, 1) == 3);
  CHECK(oracle_count(u23, 0) == 1);
  const auto two = SparsePavingMatroid::validate(4, 2, {w("1100"), w("0011")});
  CHECK(oracle_count(two, 1) == 4);
  CHECK(oracle_count(two, 0) == 1);
  CHECK_THROWS_WITH_AS(oracle_count(two, 7), doctest::Contains("oracle instance too large"),
                       BudgetError);
  CHECK_THROWS_AS(oracle_count(SparsePavingMatroid::uniform(11, 5), 1), BudgetError);
  CHECK_THROWS_AS(oracle_count(two, -1), std::invalid_argument);
}

TEST_CASE("oracle interior counts") {
  const auto u23 = SparsePavingMatroid::uniform(3, 2);
  CHECK(oracle_interior_count(u23, 1) == 0);
  const Polynomial p = ehr_uniform(2, 3);
  CHECK(Rational(oracle_interior_count(u23, 3)) == p(-3));
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for_each_small_matroid(n, k, 2, [](const SparsePavingMatroid& m) {
        REQUIRE(oracle_interior_count(m, 1) == 0);
      });
}

TEST_CASE("oracle Ehrhart polynomials") {
  CHECK(oracle_ehrhart(SparsePavingMatroid::uniform(3, 2)) == binom_poly(2, 2));
  CHECK(oracle_ehrhart(SparsePavingMatroid::validate(4, 2, {w("1100")})) ==
        ehr_uniform(2, 4) - ehr_minimal_shifted(2, 4));
  CHECK(oracle_ehrhart(SparsePavingMatroid::validate(6, 3, {w("111000"), w("000111")})) ==
        ehr_sparse(6, 3, 2));
  CHECK_THROWS_AS(oracle_ehrhart(SparsePavingMatroid::uniform(9, 4)), BudgetError);
}

TEST_CASE("uniform cross-check") {
  const OracleBudget budget{8, 5};
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (int t = 0; t <= 5; ++t)
        REQUIRE(oracle_count(SparsePavingMatroid::uniform(n, k), t, budget) ==
                count_points_uniform(k, n, t));
}

TEST_CASE("formula certification and reciprocity for n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for_each_small_matroid(n, k, 3, [&](const SparsePavingMatroid& m) {
        const Polynomial p = ehr_sparse(n, k, Integer(static_cast<unsigned long>(m.lambda())));
        for (int t = 0; t <= 4; ++t) {
          const auto d = oracle_dilation(m, t);
          REQUIRE(Rational(d.boundary_inclusive_count) == p(t));
          if (t >= 1 && p.degree() == n - 1) {
            const Rational reflected = ((n - 1) % 2) ? -p(-t) : p(-t);
            REQUIRE(reflected == Rational(d.interior_count));
          }
        }
      });
}

TEST_CASE("n = 7 against the formula") {
  for (int k = 2; k <= 5; ++k)
    for_each_small_matroid(7, k, 3, [&](const SparsePavingMatroid& m) {
      if (m.lambda() == 0 || m.lambda() == 3) {
        const Polynomial p = ehr_sparse(7, k, Integer(static_cast<unsigned long>(m.lambda())));
        for (int t = 0; t <= 3; ++t) REQUIRE(Rational(oracle_count(m, t)) == p(t));
      }
    });
}

TEST_CASE("facet and rank descriptions agree") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for_each_small_matroid(n, k, 2, [&](const SparsePavingMatroid& m) {
        for (int t = 0; t <= 3; ++t) REQUIRE(rank_description_count(m, t) == oracle_count(m, t));
      });
}

TEST_CASE("small matroid enumeration") {
  const auto fams = enumerate_small_matroids(4, 2, 2);
  CHECK(fams.size() == 1 + 6 + 3);
  CHECK(fams.front() == SparsePavingMatroid::uniform(4, 2));
  const auto only = enumerate_small_matroids(6, 3, 0);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == SparsePavingMatroid::uniform(6, 3));
  // rank 2 on five elements: pairs of disjoint 2-sets, 15 of them
  std::size_t pairs = 0;
  for (const auto& m : enumerate_small_matroids(5, 2, 2)) {
    if (m.lambda() != 2) continue;
    ++pairs;
    CHECK((m.circuit_hyperplanes()[0] & m.circuit_hyperplanes()[1]).size() == 0);
  }
  CHECK(pairs == 15);
  // the rank-2 cap floor(n/2) is never exceeded and is attained
  for (int n = 3; n <= 7; ++n) {
    std::size_t best = 0;
    for_each_small_matroid(n, 2, n, [&](const SparsePavingMatroid& m) {
      best = std::max(best, m.lambda());
    });
    CHECK(best == static_cast<std::size_t>(n / 2));
  }
  CHECK_THROWS_AS(enumerate_small_matroids(8, 3, 1), BudgetError);
}
