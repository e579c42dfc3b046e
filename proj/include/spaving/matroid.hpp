// Sparse paving matroids described by their circuit-hyperplanes.

#ifndef SPAVING_MATROID_HPP
#define SPAVING_MATROID_HPP

#include "spaving/numbers.hpp"

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaving {

/// Thrown when input does not describe a sparse paving matroid.
class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed its size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset of the ground set {1, ..., n}, n <= 64. Element i lives in bit i-1.
class SubsetMask {
 public:
  static constexpr int kMaxGround = 64;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  /// Builds the mask of 1-based elements. Throws MatroidError on an element
  /// outside 1..64.
  static SubsetMask of(std::initializer_list<int> elements);
  static SubsetMask of(std::span<const int> elements);
  /// Parses a 0/1 word, leftmost character = element 1, e.g. "1100" = {1,2}.
  static SubsetMask from_word(const std::string& word);
  /// {1, ..., n}.
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1U; }
  /// Every set element lies in 1..n.
  constexpr bool within(int n) const { return (bits_ & ~full(n).bits_) == 0; }

  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }

  friend constexpr int hamming_distance(SubsetMask a, SubsetMask b) {
    return std::popcount(a.bits_ ^ b.bits_);
  }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

  /// 1-based elements in increasing order.
  std::vector<int> elements() const;
  /// 0/1 word of length n, element 1 first.
  std::string to_word(int n) const;

 private:
  std::uint64_t bits_ = 0;
};

/// One row of a linear constraint system over x_1..x_n, with the right hand
/// side given for dilation 1 (it scales linearly with the dilation t).
struct LinearConstraint {
  enum class Relation { kEqual, kLessEqual, kGreaterEqual };

  std::vector<int> coefficients;
  Relation relation = Relation::kLessEqual;
  int rhs = 0;

  /// Whether x satisfies the row at dilation t.
  bool satisfied_by(std::span<const std::int64_t> x, std::int64_t t) const;
};

enum class Validation { kFull, kTrusted };

class SparsePavingMatroid {
 public:
  /// Checks the circuit-hyperplane family and returns the matroid with the
  /// family sorted by mask value.
  ///
  /// Errors (MatroidError): a mask that is not a k-subset of {1..n}; two
  /// masks at Hamming distance 2 ("adjacent in Johnson graph J(n,k)");
  /// more circuit-hyperplanes than the cardinality bound allows.
  /// Validation::kTrusted skips the quadratic pairwise check only.
  static SparsePavingMatroid validate(int n, int k, std::vector<SubsetMask> circuit_hyperplanes,
                                      Validation mode = Validation::kFull);

  /// U_{k,n}.
  static SparsePavingMatroid uniform(int n, int k);

  int ground_size() const { return n_; }
  int rank() const { return k_; }
  std::size_t lambda() const { return chs_.size(); }
  const std::vector<SubsetMask>& circuit_hyperplanes() const { return chs_; }
  bool is_circuit_hyperplane(SubsetMask a) const;

  /// (n, n-k, complements of the circuit-hyperplanes).
  SparsePavingMatroid dual() const;

  /// Declares h a basis. Throws MatroidError("cannot relax a basis") when h
  /// is not a circuit-hyperplane.
  SparsePavingMatroid relax(SubsetMask h) const;

  /// min(|A|, k) except that circuit-hyperplanes have rank k-1.
  int rank_of(SubsetMask a) const;

  /// C(n, k) - lambda.
  Integer bases_count() const;

  /// sum x_i = k; 0 <= x_i <= 1; sum_{i in H} x_i <= k-1 for each
  /// circuit-hyperplane H. Throws MatroidError for k = 0 or k = n.
  std::vector<LinearConstraint> facet_description() const;

  friend bool operator==(const SparsePavingMatroid&, const SparsePavingMatroid&) = default;

 private:
  SparsePavingMatroid(int n, int k, std::vector<SubsetMask> chs)
      : n_(n), k_(k), chs_(std::move(chs)) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<SubsetMask> chs_;
};

/// floor(C(n,k) * min(1/(k+1), 1/(n-k+1))): no sparse paving matroid has more
/// circuit-hyperplanes.
Integer max_ch_upper_bound(std::int64_t n, std::int64_t k);

/// Reads the text format: a line "n k", then one circuit-hyperplane per line
/// as increasing 1-based elements separated by spaces. Blank lines and lines
/// starting with '#' are ignored. Errors carry "line L, column C".
SparsePavingMatroid read_matroid(std::istream& in, Validation mode = Validation::kFull);
SparsePavingMatroid read_matroid_file(const std::string& path,
                                      Validation mode = Validation::kFull);
void write_matroid(std::ostream& out, const SparsePavingMatroid& m);

}  // namespace spaving

#endif  // SPAVING_MATROID_HPP
