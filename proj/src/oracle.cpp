#include "spaving/oracle.hpp"

#include "spaving/codes.hpp"

#include <limits>
#include <stdexcept>

namespace spaving {

namespace {

// Facet rows instantiated at one dilation, with strict rows tightened by one.
struct Instance {
  int n = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::int64_t total = 0;                       // the equality row
  std::vector<std::vector<int>> packing_rows;   // 0/1 coefficients, <= cap
  std::vector<std::int64_t> packing_caps;
  std::vector<LinearConstraint> rows;
  bool strict = false;
  std::int64_t t = 0;
};

Instance instantiate(const SparsePavingMatroid& m, std::int64_t t, bool strict) {
  using R = LinearConstraint::Relation;
  Instance inst;
  inst.n = m.ground_size();
  inst.t = t;
  inst.strict = strict;
  inst.rows = m.facet_description();
  inst.lower.assign(inst.n, std::numeric_limits<std::int64_t>::min() / 4);
  inst.upper.assign(inst.n, std::numeric_limits<std::int64_t>::max() / 4);
  const std::int64_t slack = strict ? 1 : 0;
  for (const auto& row : inst.rows) {
    int support = 0;
    int var = -1;
    for (int i = 0; i < inst.n; ++i)
      if (row.coefficients[i] != 0) {
        ++support;
        var = i;
      }
    const std::int64_t rhs = row.rhs * t;
    if (row.relation == R::kEqual) {
      inst.total = rhs;
    } else if (support == 1 && row.coefficients[var] == 1) {
      if (row.relation == R::kGreaterEqual)
        inst.lower[var] = std::max(inst.lower[var], rhs + slack);
      else
        inst.upper[var] = std::min(inst.upper[var], rhs - slack);
    } else if (row.relation == R::kLessEqual) {
      inst.packing_rows.push_back(row.coefficients);
      inst.packing_caps.push_back(rhs - slack);
    } else {
      throw std::logic_error("unexpected facet row");
    }
  }
  return inst;
}

bool row_holds(const LinearConstraint& row, const std::vector<std::int64_t>& x, std::int64_t t,
               bool strict) {
  if (!strict || row.relation == LinearConstraint::Relation::kEqual)
    return row.satisfied_by(x, t);
  std::int64_t lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += row.coefficients[i] * x[i];
  return row.relation == LinearConstraint::Relation::kLessEqual ? lhs < row.rhs * t
                                                                : lhs > row.rhs * t;
}

class Counter {
 public:
  explicit Counter(const Instance& inst)
      : inst_(inst), x_(inst.n, 0), packed_(inst.packing_rows.size(), 0) {
    // suffix_lo_[i] = sum of lower bounds of coordinates i..n-1, same for hi.
    suffix_lo_.assign(inst.n + 1, 0);
    suffix_hi_.assign(inst.n + 1, 0);
    for (int i = inst.n - 1; i >= 0; --i) {
      suffix_lo_[i] = suffix_lo_[i + 1] + inst.lower[i];
      suffix_hi_[i] = suffix_hi_[i + 1] + inst.upper[i];
    }
  }

  Integer run() {
    count_ = 0;
    for (int i = 0; i < inst_.n; ++i)
      if (inst_.lower[i] > inst_.upper[i]) return 0;
    descend(0, inst_.total);
    return Integer(static_cast<unsigned long>(count_));
  }

 private:
  void descend(int i, std::int64_t remaining) {
    if (i == inst_.n) {
      if (remaining != 0) return;
      for (const auto& row : inst_.rows)
        if (!row_holds(row, x_, inst_.t, inst_.strict)) return;
      ++count_;
      return;
    }
    const std::int64_t lo = std::max(inst_.lower[i], remaining - suffix_hi_[i + 1]);
    const std::int64_t hi = std::min(inst_.upper[i], remaining - suffix_lo_[i + 1]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[i] = v;
      bool ok = true;
      for (std::size_t r = 0; r < packed_.size(); ++r) {
        packed_[r] += inst_.packing_rows[r][i] * v;
        if (packed_[r] > inst_.packing_caps[r]) ok = false;
      }
      if (ok) descend(i + 1, remaining - v);
      for (std::size_t r = 0; r < packed_.size(); ++r) packed_[r] -= inst_.packing_rows[r][i] * v;
    }
    x_[i] = 0;
  }

  const Instance& inst_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> packed_;
  std::vector<std::int64_t> suffix_lo_;
  std::vector<std::int64_t> suffix_hi_;
  std::uint64_t count_ = 0;
};

void check_budget(const SparsePavingMatroid& m, std::int64_t t, const OracleBudget& budget) {
  if (t < 0) throw std::invalid_argument("negative dilation");
  if (m.ground_size() > budget.max_ground || t > budget.max_dilation)
    throw BudgetError("oracle instance too large: n = " + std::to_string(m.ground_size()) +
                      ", t = " + std::to_string(t));
}

Integer count(const SparsePavingMatroid& m, std::int64_t t, bool strict) {
  const Instance inst = instantiate(m, t, strict);
  return Counter(inst).run();
}

}  // namespace

Integer oracle_count(const SparsePavingMatroid& m, std::int64_t t, OracleBudget budget) {
  check_budget(m, t, budget);
  return count(m, t, false);
}

Integer oracle_interior_count(const SparsePavingMatroid& m, std::int64_t t, OracleBudget budget) {
  check_budget(m, t, budget);
  return count(m, t, true);
}

DilationCount oracle_dilation(const SparsePavingMatroid& m, std::int64_t t, OracleBudget budget) {
  return {t, oracle_count(m, t, budget), oracle_interior_count(m, t, budget)};
}

Polynomial oracle_ehrhart(const SparsePavingMatroid& m) {
  const int n = m.ground_size();
  if (n > 8) throw BudgetError("oracle instance too large: n = " + std::to_string(n));
  const OracleBudget budget{8, 7};
  std::vector<Integer> values;
  for (int t = 0; t < n; ++t) values.push_back(oracle_count(m, t, budget));
  return interpolate_at_naturals(values);
}

Integer rank_description_count(const SparsePavingMatroid& m, std::int64_t t) {
  const int n = m.ground_size();
  if (n > 8) throw BudgetError("rank description count limited to n <= 8");
  const std::int64_t total = m.rank() * t;
  std::vector<int> ranks(std::size_t{1} << n);
  for (std::uint64_t a = 0; a < ranks.size(); ++a) ranks[a] = m.rank_of(SubsetMask(a));

  std::vector<std::int64_t> x(n, 0);
  std::uint64_t found = 0;
  // Compositions of k*t into n nonnegative parts; singletons cap each part at t.
  std::function<void(int, std::int64_t)> walk = [&](int i, std::int64_t remaining) {
    if (i == n - 1) {
      if (remaining < 0) return;
      x[i] = remaining;
      for (std::uint64_t a = 1; a < ranks.size(); ++a) {
        std::int64_t s = 0;
        for (int j = 0; j < n; ++j)
          if ((a >> j) & 1U) s += x[j];
        if (s > t * ranks[a]) return;
      }
      ++found;
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      x[i] = v;
      walk(i + 1, remaining - v);
    }
  };
  if (n == 0) return total == 0 ? 1 : 0;
  walk(0, total);
  return Integer(static_cast<unsigned long>(found));
}

void for_each_small_matroid(int n, int k, int lambda_max,
                            const std::function<void(const SparsePavingMatroid&)>& visit) {
  if (n < 1 || n > 7) throw BudgetError("small matroid enumeration limited to 1 <= n <= 7");
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const long cap = max_ch_upper_bound(n, k).get_si();
  if (lambda_max > cap) lambda_max = static_cast<int>(cap);
  std::vector<SubsetMask> subsets;
  for_each_k_subset(n, k, [&](SubsetMask s) { subsets.push_back(s); });

  std::vector<SubsetMask> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    visit(SparsePavingMatroid::validate(n, k, chosen));
    if (static_cast<int>(chosen.size()) >= lambda_max) return;
    for (std::size_t i = from; i < subsets.size(); ++i) {
      bool stable = true;
      for (const auto& c : chosen)
        if (hamming_distance(c, subsets[i]) < 4) {
          stable = false;
          break;
        }
      if (!stable) continue;
      chosen.push_back(subsets[i]);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

std::vector<SparsePavingMatroid> enumerate_small_matroids(int n, int k, int lambda_max) {
  std::vector<SparsePavingMatroid> out;
  for_each_small_matroid(n, k, lambda_max, [&](const SparsePavingMatroid& m) { out.push_back(m); });
  return out;
}

}  // namespace spaving
