// Constant-weight codes of minimum distance 4 from the Graham-Sloane residue
// partition, and bounds on the number of circuit-hyperplanes.

#ifndef SPAVING_CODES_HPP
#define SPAVING_CODES_HPP

#include "spaving/matroid.hpp"
#include "spaving/numbers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spaving {

/// Words of length n and weight k with pairwise Hamming distance >= 4.
struct ConstantWeightCode {
  int n = 0;
  int k = 0;
  std::vector<SubsetMask> words;  // ascending mask value
  std::optional<int> class_index;

  /// The sparse paving matroid whose circuit-hyperplanes are the words.
  SparsePavingMatroid to_matroid(Validation mode = Validation::kFull) const;
};

/// Default cap on C(n, k) for the class enumerations.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// sum over elements i of (i - 1), modulo n.
int gs_residue(SubsetMask word, int n);

/// |C_i| for i = 0..n-1, where C_i collects the weight-k words of residue i.
/// Throws BudgetError("class enumeration too large") when C(n, k) > budget.
std::vector<Integer> gs_classes(int n, int k,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// A largest class, smallest residue on ties, words in ascending mask order.
ConstantWeightCode gs_best_class(int n, int k,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// floor(C(n, k) / n).
Integer gs_lower_bound(std::int64_t n, std::int64_t k);

/// Calls visit(mask) for every weight-k subset of {1..n} in increasing mask
/// order.
template <typename Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(SubsetMask(0));
    return;
  }
  const std::uint64_t limit = SubsetMask::full(n).bits();
  std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    visit(SubsetMask(v));
    if (v == limit || (v & ~limit) != 0) break;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r == 0) break;
    const std::uint64_t next = (((r ^ v) >> 2) / c) | r;
    if ((next & ~limit) != 0) break;
    v = next;
  }
}

}  // namespace spaving

#endif  // SPAVING_CODES_HPP
