// Ehrhart polynomials of uniform, minimal and sparse paving matroids, the
// quadratic-coefficient bounds, and the counterexample search.

#ifndef SPAVING_EHRHART_HPP
#define SPAVING_EHRHART_HPP

#include "spaving/numbers.hpp"
#include "spaving/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spaving {

// ---------------------------------------------------------------------------
// Uniform matroids (hypersimplices)

/// Integer points of t * Delta(k, n): vectors with 0 <= x_i <= t summing to
/// k*t, counted by inclusion-exclusion over the coordinates exceeding t.
Integer count_points_uniform(std::int64_t k, std::int64_t n, std::int64_t t);

/// ehr(U_{k,n}, t), interpolated from count_points_uniform at t = 0..n-1.
/// For k = 0 or k = n the polytope is a point and the result is 1.
Polynomial ehr_uniform(int k, int n);

/// [t^m] ehr(U_{k,n}, t) from the Newton forward differences of
/// count_points_uniform, without building the whole polynomial. This is the
/// route for very large n.
Rational uniform_coefficient_newton(int k, int n, int m);

// ---------------------------------------------------------------------------
// Minimal matroids

/// ehr(T_{k,n}, t) for 1 <= k <= n-1.
Polynomial ehr_minimal(int k, int n);

/// ehr(T_{k,n}, t - 1): the increment of the Ehrhart polynomial under one
/// circuit-hyperplane relaxation. Its coefficients of degree >= 1 are
/// positive and its constant term is 0; both are checked on every call.
Polynomial ehr_minimal_shifted(int k, int n);

/// [t^2] ehr(T_{k,n}, t - 1) in closed form (Stirling numbers and a finite
/// sum), for 2 <= k <= n-2.
Rational quad_coeff_minimal_shifted(int k, int n);

// ---------------------------------------------------------------------------
// Sparse paving matroids

/// ehr(U_{k,n}, t) - lambda * ehr(T_{k,n}, t - 1), for 0 < k < n and
/// 0 <= lambda <= max_ch_upper_bound(n, k). Out-of-range lambda throws
/// MatroidError.
Polynomial ehr_sparse(int n, int k, const Integer& lambda);

/// [t^2] ehr_sparse(n, k, lambda) for very large n: the uniform part via
/// Newton differences, the minimal part via quad_coeff_minimal_shifted.
Rational sparse_quad_coefficient_newton(int n, int k, const Integer& lambda);

/// Degrees m with [t^m] p < 0, ascending.
std::vector<int> negative_coefficient_indices(const Polynomial& p);

/// Every coefficient up to the degree is strictly positive.
bool has_positive_coefficients(const Polynomial& p);

// ---------------------------------------------------------------------------
// Quadratic coefficient bounds (2 <= k <= n-2)

/// 1 / (k (n-1)), a lower bound for [t^2] ehr(T_{k,n}, t-1).
Rational lower_bound_quad(int k, int n);

/// (C(k+1,2) + C(k,2)) [n over 3] / (n-1)!, an upper bound for
/// [t^2] ehr(U_{k,n}, t).
Rational intermediate_bound_quad_uniform(int k, int n);

/// C(k+1, 2) H_{n-1}^2, a weaker and simpler upper bound.
Rational upper_bound_quad_uniform(int k, int n);

/// C(k+1,2) H_{n-1}^2 < C(n,k) / (n k (n-1)), decided exactly. When it holds,
/// the Graham-Sloane matroid of rank k on n elements has a negative
/// quadratic Ehrhart coefficient.
bool counterexample_inequality(int k, int n);

/// The variant that covers every 9 <= k <= n/2 at once:
/// C(n+1,2) H_n^2 < C(n,9) / (n * n (n-1)).
bool counterexample_inequality_rank9plus(int n);

// ---------------------------------------------------------------------------
// Counterexample reports

enum class LambdaProvenance { kGsBound, kExternalTable, kUser };

std::string to_string(LambdaProvenance p);
/// Accepts "gs-bound", "external-table", "user". Throws std::invalid_argument.
LambdaProvenance parse_provenance(const std::string& text);

struct CounterexampleReport {
  int n = 0;
  int k = 0;
  Integer lambda;
  LambdaProvenance provenance = LambdaProvenance::kUser;
  Polynomial ehrhart;
  std::vector<int> negative_coefficient_indices;
  bool is_ehrhart_positive = true;

  friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

CounterexampleReport make_report(int n, int k, const Integer& lambda,
                                 LambdaProvenance provenance);

/// One report per (n, k) with 0 < k < n inside the ranges, lambda =
/// gs_lower_bound(n, k), ordered by (n, k). Pairs are spread over `threads`
/// workers; the output order does not depend on it.
std::vector<CounterexampleReport> search_counterexamples(int n_min, int n_max, int k_min,
                                                         int k_max, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Rank two

/// ehr(U_{2,n}, t) - floor(n/2) ehr(T_{2,n}, t-1), n >= 3.
Polynomial rank2_poly(int n);

/// [t^m] ehr(T_{2,n}, t-1) = ([n-2 over m] + (n-2) [n-2 over m-1]) / (n-1)!.
Rational coeff_minimal_shifted_rank2(int n, int m);

/// One violated instance found by verify_rank2_inequalities.
struct Rank2Violation {
  std::string inequality;
  int n = 0;
  int m = 0;
};

/// Exhaustive exact check, for all n up to n_max, of the Stirling-number
/// inequalities behind rank-2 positivity:
///   coefficient target  [n over m+1](2^m-m-1) + (n-1)[n-1 over m+1]
///                         >= (n/2)([n-2 over m] + (n-2)[n-2 over m-1]),
///                       4 <= n, 2 <= m <= n-1;
///   reduced             [n over m-1] <= [n over m+1](2^m-m-2),
///                       3 <= m <= 12, 12 <= n, m+1 <= n;
///   ratio               [n over m+1]/[n over m] >= 2(1/m - 1/n) for 13 <= m <= n-1,
///                       and m^2(m+1)(m-1)/4 <= 2^m-m-2 for 13 <= m <= n_max;
///   reduced m = 12      [n over 11] <= 4082 [n over 13], 13 <= n;
///   target m = 2        4 <= n.
/// Returns every violation; empty means all hold.
std::vector<Rank2Violation> rank2_inequality_violations(int n_max);

bool verify_rank2_inequalities(int n_max);

// ---------------------------------------------------------------------------
// h* vectors and real-rootedness

/// h*_0..h*_dim with sum_t p(t) z^t = h*(z) / (1-z)^(dim+1). Throws
/// std::invalid_argument("dimension mismatch") unless deg p == dim.
std::vector<Rational> hstar(const Polynomial& p, int dim);

/// Whether every complex root of sum_i coeffs[i] z^i is real, decided with a
/// Sturm sequence. Throws std::invalid_argument on the zero polynomial.
bool is_real_rooted(const std::vector<Rational>& coeffs);

/// Number of distinct real roots, via Sturm's theorem.
int count_distinct_real_roots(const Polynomial& p);

}  // namespace spaving

#endif  // SPAVING_EHRHART_HPP
