#include "spaving/codes.hpp"
#include "spaving/matroid.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace spaving;

namespace {

SubsetMask w(const char* word) { return SubsetMask::from_word(word); }

std::vector<SubsetMask> bases_of(const SparsePavingMatroid& m) {
  std::vector<SubsetMask> out;
  for_each_k_subset(m.ground_size(), m.rank(), [&](SubsetMask s) {
    if (!m.is_circuit_hyperplane(s)) out.push_back(s);
  });
  return out;
}

// max |A cap B| over bases B
int brute_rank(const std::vector<SubsetMask>& bases, SubsetMask a) {
  int best = 0;
  for (auto b : bases) best = std::max(best, (a & b).size());
  return best;
}

// Random stable set of J(n, k) by greedy insertion in shuffled order.
SparsePavingMatroid random_matroid(std::mt19937& rng, int n, int k) {
  std::vector<SubsetMask> all;
  for_each_k_subset(n, k, [&](SubsetMask s) { all.push_back(s); });
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<SubsetMask> chosen;
  const Integer cap = max_ch_upper_bound(n, k);
  for (auto s : all) {
    if (Integer(static_cast<unsigned long>(chosen.size())) >= cap) break;
    bool ok = true;
    for (auto c : chosen) ok = ok && hamming_distance(c, s) >= 4;
    if (ok && rng() % 2) chosen.push_back(s);
  }
  return SparsePavingMatroid::validate(n, k, chosen);
}

}  // namespace

TEST_CASE("subset masks") {
  CHECK(w("1100") == SubsetMask::of({1, 2}));
  CHECK(w("1100").to_word(4) == "1100");
  CHECK(SubsetMask::of({2, 4}).elements() == std::vector<int>{2, 4});
  CHECK(hamming_distance(w("1100"), w("0011")) == 4);
  CHECK(w("1100").complement(4) == w("0011"));
  CHECK_THROWS_AS(SubsetMask::from_word("1201"), MatroidError);
}

TEST_CASE("validate") {
  const auto m = SparsePavingMatroid::validate(4, 2, {w("1100"), w("0011")});
  CHECK(m.lambda() == 2);
  CHECK_THROWS_WITH_AS(SparsePavingMatroid::validate(4, 2, {w("1100"), w("1010")}),
                       doctest::Contains("adjacent in Johnson graph J(4,2)"), MatroidError);
  CHECK_THROWS_WITH_AS(SparsePavingMatroid::validate(4, 2, {w("1110")}),
                       doctest::Contains("not a k-subset"), MatroidError);
  CHECK_THROWS_WITH_AS(SparsePavingMatroid::validate(4, 2, {w("1100"), w("1100")}),
                       doctest::Contains("duplicate"), MatroidError);
  CHECK(SparsePavingMatroid::validate(6, 3, {}) == SparsePavingMatroid::uniform(6, 3));
  // three disjoint pairs meet the bound floor(15 / 5) = 3
  CHECK(SparsePavingMatroid::validate(6, 2, {w("110000"), w("001100"), w("000011")}).lambda() == 3);
  CHECK_THROWS_AS(SparsePavingMatroid::validate(2, 1, {w("10"), w("01")}), MatroidError);
}

TEST_CASE("circuit-hyperplane bound") {
  CHECK(max_ch_upper_bound(18, 9) == 4862);
  CHECK(max_ch_upper_bound(20, 9) == 13996);
  for (int n = 1; n <= 30; ++n) CHECK(max_ch_upper_bound(n, n) == 0);
  // No stable set exceeds the bound, so only a trusted family can reach this check.
  CHECK_THROWS_WITH_AS(SparsePavingMatroid::validate(2, 1, {w("10"), w("01")}, Validation::kTrusted),
                       doctest::Contains("exceeds circuit-hyperplane bound"), MatroidError);
}

TEST_CASE("dual, relax and bases") {
  const auto m = SparsePavingMatroid::validate(4, 2, {w("1100")});
  CHECK(m.dual() == SparsePavingMatroid::validate(4, 2, {w("0011")}));
  const auto two = SparsePavingMatroid::validate(4, 2, {w("1100"), w("0011")});
  CHECK(two.relax(w("1100")) == SparsePavingMatroid::validate(4, 2, {w("0011")}));
  CHECK(two.relax(w("1100")).relax(w("0011")) == SparsePavingMatroid::uniform(4, 2));
  CHECK_THROWS_WITH_AS(two.relax(w("1010")), "cannot relax a basis", MatroidError);
  CHECK(two.bases_count() == 4);
  CHECK(SparsePavingMatroid::uniform(9, 4).bases_count() == 126);
}

TEST_CASE("dual at (20, 9) keeps the family size") {
  const auto m = gs_best_class(20, 9).to_matroid(Validation::kTrusted);
  const auto d = m.dual();
  CHECK(d.rank() == 11);
  CHECK(d.lambda() == m.lambda());
  CHECK(d.dual() == m);
  CHECK(m.bases_count() == 159562);
}

TEST_CASE("dual is an involution and preserves validity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 6;
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const auto m = random_matroid(rng, n, k);
    const auto d = m.dual();
    REQUIRE(d.dual() == m);
    REQUIRE(SparsePavingMatroid::validate(n, n - k, d.circuit_hyperplanes()) == d);
  }
}

TEST_CASE("rank function against bases") {
  const auto m = SparsePavingMatroid::validate(4, 2, {w("1100")});
  CHECK(m.rank_of(w("1110")) == 2);
  CHECK(m.rank_of(w("1100")) == 1);
  CHECK(m.rank_of(w("1000")) == 1);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const auto mm = random_matroid(rng, n, k);
    const auto bases = bases_of(mm);
    for (std::uint64_t a = 0; a < (1ULL << n); ++a)
      REQUIRE(mm.rank_of(SubsetMask(a)) == brute_rank(bases, SubsetMask(a)));
  }
}

TEST_CASE("facet description") {
  using R = LinearConstraint::Relation;
  const auto u = SparsePavingMatroid::uniform(4, 2).facet_description();
  CHECK(u.size() == 9);
  const auto f = SparsePavingMatroid::validate(4, 2, {w("1100")}).facet_description();
  REQUIRE(f.size() == 10);
  CHECK(f.back().relation == R::kLessEqual);
  CHECK(f.back().coefficients == std::vector<int>{1, 1, 0, 0});
  CHECK(f.back().rhs == 1);
  CHECK_THROWS_WITH_AS(SparsePavingMatroid::uniform(4, 0).facet_description(),
                       "degenerate polytope (a point)", MatroidError);
  CHECK_THROWS_AS(SparsePavingMatroid::uniform(4, 4).facet_description(), MatroidError);
}

TEST_CASE("0/1 points of the facet description are exactly the bases") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const auto m = random_matroid(rng, n, k);
    const auto rows = m.facet_description();
    for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
      std::vector<std::int64_t> x(n);
      for (int i = 0; i < n; ++i) x[i] = (a >> i) & 1U;
      bool inside = true;
      for (const auto& r : rows) inside = inside && r.satisfied_by(x, 1);
      const bool basis = SubsetMask(a).size() == k && !m.is_circuit_hyperplane(SubsetMask(a));
      REQUIRE(inside == basis);
    }
  }
}

TEST_CASE("matroid text format") {
  const auto m = SparsePavingMatroid::validate(6, 3, {w("111000"), w("000111")});
  std::ostringstream out;
  write_matroid(out, m);
  CHECK(out.str() == "6 3\n1 2 3\n4 5 6\n");
  std::istringstream in("# comment\n6 3\n\n1 2 3\n4 5 6\n");
  CHECK(read_matroid(in) == m);

  std::istringstream bad_token("4 2\n1 x\n");
  CHECK_THROWS_WITH_AS(read_matroid(bad_token), doctest::Contains("line 2, column 3"), MatroidError);
  std::istringstream out_of_range("4 2\n1 5\n");
  CHECK_THROWS_WITH_AS(read_matroid(out_of_range), doctest::Contains("line 2"), MatroidError);
  std::istringstream adjacent("4 2\n1 2\n1 3\n");
  CHECK_THROWS_WITH_AS(read_matroid(adjacent), doctest::Contains("adjacent"), MatroidError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_matroid(empty), MatroidError);
  CHECK_THROWS_AS(read_matroid_file("/nonexistent/matroid.txt"), MatroidError);
}
