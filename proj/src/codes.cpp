#include "spaving/codes.hpp"

#include <algorithm>

namespace spaving {

namespace {

void check_budget(int n, int k, std::uint64_t budget) {
  if (n < 0 || n > SubsetMask::kMaxGround || k < 0 || k > n)
    throw std::invalid_argument("need 0 <= k <= n <= 64");
  if (binomial(n, k) > Integer(static_cast<unsigned long>(budget)))
    throw BudgetError("class enumeration too large: C(" + std::to_string(n) + "," +
                      std::to_string(k) + ") = " + binomial(n, k).get_str() + " exceeds budget " +
                      std::to_string(budget));
}

}  // namespace

SparsePavingMatroid ConstantWeightCode::to_matroid(Validation mode) const {
  return SparsePavingMatroid::validate(n, k, words, mode);
}

int gs_residue(SubsetMask word, int n) {
  if (n <= 0) throw std::invalid_argument("residue modulus must be positive");
  long sum = 0;
  for (int e : word.elements()) sum += e - 1;
  return static_cast<int>(sum % n);
}

std::vector<Integer> gs_classes(int n, int k, std::uint64_t budget) {
  check_budget(n, k, budget);
  if (n == 0) return {};
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(n), 0);
  for_each_k_subset(n, k, [&](SubsetMask w) { ++sizes[gs_residue(w, n)]; });
  std::vector<Integer> out;
  out.reserve(sizes.size());
  for (auto s : sizes) out.emplace_back(static_cast<unsigned long>(s));
  return out;
}

ConstantWeightCode gs_best_class(int n, int k, std::uint64_t budget) {
  const auto sizes = gs_classes(n, k, budget);
  if (sizes.empty()) throw std::invalid_argument("empty ground set");
  const auto best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  ConstantWeightCode code{n, k, {}, best};
  code.words.reserve(sizes[best].get_ui());
  for_each_k_subset(n, k, [&](SubsetMask w) {
    if (gs_residue(w, n) == best) code.words.push_back(w);
  });
  return code;
}

Integer gs_lower_bound(std::int64_t n, std::int64_t k) {
  if (n <= 0) return 0;
  Integer q;
  const Integer b = binomial(n, k);
  mpz_fdiv_q_ui(q.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  return q;
}

}  // namespace spaving
