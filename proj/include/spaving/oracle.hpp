// Brute-force lattice point counts of dilated sparse paving matroid
// polytopes. Independent of the closed-form Ehrhart formulas; used to certify
// them on small instances.

#ifndef SPAVING_ORACLE_HPP
#define SPAVING_ORACLE_HPP

#include "spaving/matroid.hpp"
#include "spaving/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace spaving {

struct DilationCount {
  std::int64_t t = 0;
  Integer boundary_inclusive_count;
  Integer interior_count;
};

struct OracleBudget {
  int max_ground = 10;
  std::int64_t max_dilation = 6;
};

/// #(t P(M) cap Z^n), by depth-first search over the coordinates with
/// remaining-sum pruning against the facet description. Requires 0 < k < n.
/// Throws BudgetError("oracle instance too large") beyond the budget.
Integer oracle_count(const SparsePavingMatroid& m, std::int64_t t, OracleBudget budget = {});

/// Lattice points of the relative interior of t P(M): every facet
/// inequality strict, the sum constraint kept as an equality.
Integer oracle_interior_count(const SparsePavingMatroid& m, std::int64_t t,
                              OracleBudget budget = {});

DilationCount oracle_dilation(const SparsePavingMatroid& m, std::int64_t t,
                              OracleBudget budget = {});

/// Interpolates oracle_count at t = 0..n-1. Requires n <= 8.
Polynomial oracle_ehrhart(const SparsePavingMatroid& m);

/// Counts integer points of the dilation t of {x >= 0, sum x = k,
/// x(A) <= rank(A) for every A}, the rank-function description of P(M).
/// Exhaustive over subsets A; meant for n <= 6.
Integer rank_description_count(const SparsePavingMatroid& m, std::int64_t t);

/// Every sparse paving matroid on {1..n} of rank k with at most lambda_max
/// circuit-hyperplanes (clamped to max_ch_upper_bound), each family in ascending mask order, families in
/// lexicographic order (the empty family first). Requires n <= 7.
void for_each_small_matroid(int n, int k, int lambda_max,
                            const std::function<void(const SparsePavingMatroid&)>& visit);

std::vector<SparsePavingMatroid> enumerate_small_matroids(int n, int k, int lambda_max);

}  // namespace spaving

#endif  // SPAVING_ORACLE_HPP
