#include "spaving/ehrhart.hpp"

#include "spaving/codes.hpp"
#include "spaving/matroid.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

namespace spaving {

namespace {

// Polynomials keyed by (k, n), computed once per process.
class PolynomialCache {
 public:
  template <typename Make>
  Polynomial get(int k, int n, Make&& make) {
    const std::pair key{k, n};
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Polynomial p = make();
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(p)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Polynomial> cache_;
};

PolynomialCache& uniform_cache() {
  static PolynomialCache c;
  return c;
}

PolynomialCache& minimal_shifted_cache() {
  static PolynomialCache c;
  return c;
}

void require_proper_rank(int k, int n, const char* what) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument(std::string(what) + ": need 1 <= k <= n-1, got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n));
}

void require_quadratic_range(int k, int n, const char* what) {
  if (k < 2 || k > n - 2)
    throw std::invalid_argument(std::string(what) + ": need 2 <= k <= n-2, got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n));
}

std::vector<Integer> uniform_counts(int k, int n) {
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) values.push_back(count_points_uniform(k, n, t));
  return values;
}

}  // namespace

Integer count_points_uniform(std::int64_t k, std::int64_t n, std::int64_t t) {
  if (n < 1 || k < 0 || k > n || t < 0) return 0;
  Integer total = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const std::int64_t rest = k * t - j * (t + 1);
    if (rest < 0) break;
    const Integer term = binomial(n, j) * binomial(rest + n - 1, n - 1);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Polynomial ehr_uniform(int k, int n) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("ehr_uniform: need 0 <= k <= n, n >= 1");
  if (k == 0 || k == n) return Polynomial::constant(1);
  return uniform_cache().get(k, n, [&] {
    const auto values = uniform_counts(k, n);
    return interpolate_at_naturals(values);
  });
}

Rational uniform_coefficient_newton(int k, int n, int m) {
  require_proper_rank(k, n, "uniform_coefficient_newton");
  const int d = n - 1;
  if (m < 0 || m > d) return 0;
  std::vector<Integer> diff = uniform_counts(k, n);
  for (int level = 1; level <= d; ++level)
    for (int i = d; i >= level; --i) diff[i] -= diff[i - 1];

  // [t^m] C(t, j) = (-1)^(j-m) [j over m] / j!; sum over a common d!.
  Integer acc = 0;
  Integer scale = 1;  // d! / j!
  for (int j = d; j >= m; --j) {
    if (diff[j] != 0) {
      Integer term = diff[j] * stirling1_unsigned(j, m) * scale;
      if ((j - m) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    scale *= static_cast<unsigned long>(j);
  }
  return make_rational(acc, factorial(d));
}

Polynomial ehr_minimal(int k, int n) {
  require_proper_rank(k, n, "ehr_minimal");
  Polynomial sum;
  for (int j = 0; j <= k - 1; ++j)
    sum += binom_poly(j, j) * Rational(binomial(n - k - 1 + j, j));
  Polynomial p = binom_poly(n - k, n - k) * sum;
  return p * Rational(1, binomial(n - 1, k - 1));
}

Polynomial ehr_minimal_shifted(int k, int n) {
  require_proper_rank(k, n, "ehr_minimal_shifted");
  return minimal_shifted_cache().get(k, n, [&] {
    Polynomial p = poly_shift(ehr_minimal(k, n), Rational(-1));
    if (p.coefficient(0) != 0)
      throw std::logic_error("ehr_minimal_shifted: nonzero constant term");
    for (int m = 1; m <= n - 1; ++m)
      if (p.coefficient(m) <= 0)
        throw std::logic_error("ehr_minimal_shifted: non-positive coefficient at degree " +
                               std::to_string(m));
    return p;
  });
}

Rational quad_coeff_minimal_shifted(int k, int n) {
  require_quadratic_range(k, n, "quad_coeff_minimal_shifted");
  const int r = n - k;
  Rational sum = 0;
  for (int j = 1; j <= k - 1; ++j) sum += Rational(binomial(r - 1 + j, j), j);
  sum /= r;
  Rational first = make_rational(stirling1_unsigned(r, 2), factorial(r));
  Rational out = (first + sum) / Rational(binomial(n - 1, k - 1));
  out.canonicalize();
  return out;
}

Polynomial ehr_sparse(int n, int k, const Integer& lambda) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::invalid_argument("ehr_sparse: need 0 < k < n");
  const Integer bound = max_ch_upper_bound(n, k);
  if (lambda < 0 || lambda > bound)
    throw MatroidError("no sparse paving matroid with this lambda exists: lambda = " +
                       lambda.get_str() + ", bound = " + bound.get_str());
  Polynomial p = ehr_uniform(k, n);
  if (lambda != 0) p -= ehr_minimal_shifted(k, n) * Rational(lambda);
  return p;
}

Rational sparse_quad_coefficient_newton(int n, int k, const Integer& lambda) {
  require_quadratic_range(k, n, "sparse_quad_coefficient_newton");
  const Integer bound = max_ch_upper_bound(n, k);
  if (lambda < 0 || lambda > bound)
    throw MatroidError("no sparse paving matroid with this lambda exists: lambda = " +
                       lambda.get_str() + ", bound = " + bound.get_str());
  Rational q = uniform_coefficient_newton(k, n, 2) - Rational(lambda) * quad_coeff_minimal_shifted(k, n);
  q.canonicalize();
  return q;
}

std::vector<int> negative_coefficient_indices(const Polynomial& p) {
  std::vector<int> out;
  for (int m = 0; m <= p.degree(); ++m)
    if (p.coefficient(m) < 0) out.push_back(m);
  return out;
}

bool has_positive_coefficients(const Polynomial& p) {
  if (p.is_zero()) return false;
  for (const auto& c : p.coefficients())
    if (c <= 0) return false;
  return true;
}

Rational lower_bound_quad(int k, int n) {
  require_quadratic_range(k, n, "lower_bound_quad");
  return Rational(1, static_cast<long>(k) * (n - 1));
}

Rational intermediate_bound_quad_uniform(int k, int n) {
  require_quadratic_range(k, n, "intermediate_bound_quad_uniform");
  return make_rational((binomial(k + 1, 2) + binomial(k, 2)) * stirling1_unsigned(n, 3),
                       factorial(n - 1));
}

Rational upper_bound_quad_uniform(int k, int n) {
  require_quadratic_range(k, n, "upper_bound_quad_uniform");
  const Rational h = harmonic(n - 1);
  Rational out = Rational(binomial(k + 1, 2)) * h * h;
  out.canonicalize();
  return out;
}

bool counterexample_inequality(int k, int n) {
  require_quadratic_range(k, n, "counterexample_inequality");
  const Rational lhs = upper_bound_quad_uniform(k, n);
  const Rational rhs = make_rational(binomial(n, k), Integer(n) * k * (n - 1));
  return lhs < rhs;
}

bool counterexample_inequality_rank9plus(int n) {
  if (n < 18) throw std::invalid_argument("counterexample_inequality_rank9plus: need n >= 18");
  const Rational h = harmonic(n);
  const Rational lhs = Rational(binomial(n + 1, 2)) * h * h;
  const Rational rhs = make_rational(binomial(n, 9), Integer(n) * n * (n - 1));
  return lhs < rhs;
}

std::string to_string(LambdaProvenance p) {
  switch (p) {
    case LambdaProvenance::kGsBound:
      return "gs-bound";
    case LambdaProvenance::kExternalTable:
      return "external-table";
    case LambdaProvenance::kUser:
      return "user";
  }
  return "user";
}

LambdaProvenance parse_provenance(const std::string& text) {
  if (text == "gs-bound") return LambdaProvenance::kGsBound;
  if (text == "external-table") return LambdaProvenance::kExternalTable;
  if (text == "user") return LambdaProvenance::kUser;
  throw std::invalid_argument("unknown lambda provenance '" + text +
                              "' (expected gs-bound, external-table or user)");
}

CounterexampleReport make_report(int n, int k, const Integer& lambda,
                                 LambdaProvenance provenance) {
  CounterexampleReport r;
  r.n = n;
  r.k = k;
  r.lambda = lambda;
  r.provenance = provenance;
  r.ehrhart = ehr_sparse(n, k, lambda);
  r.negative_coefficient_indices = negative_coefficient_indices(r.ehrhart);
  r.is_ehrhart_positive = r.negative_coefficient_indices.empty();
  return r;
}

std::vector<CounterexampleReport> search_counterexamples(int n_min, int n_max, int k_min,
                                                         int k_max, unsigned threads) {
  std::vector<std::pair<int, int>> pairs;
  for (int n = std::max(n_min, 2); n <= n_max; ++n)
    for (int k = std::max(k_min, 1); k <= std::min(k_max, n - 1); ++k) pairs.emplace_back(n, k);

  std::vector<CounterexampleReport> out(pairs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < pairs.size(); i = next++) {
        const auto [n, k] = pairs[i];
        out[i] = make_report(n, k, gs_lower_bound(n, k), LambdaProvenance::kGsBound);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = pairs.size();
    }
  };
  if (threads <= 1 || pairs.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace spaving
