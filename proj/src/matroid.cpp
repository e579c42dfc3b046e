#include "spaving/matroid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace spaving {

SubsetMask SubsetMask::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround)
      throw MatroidError("element " + std::to_string(e) + " outside 1.." +
                         std::to_string(kMaxGround));
    bits |= std::uint64_t{1} << (e - 1);
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::from_word(const std::string& word) {
  if (word.size() > static_cast<std::size_t>(kMaxGround))
    throw MatroidError("word longer than " + std::to_string(kMaxGround));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (word[i] != '0')
      throw MatroidError("word '" + word + "' is not binary");
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string SubsetMask::to_word(int n) const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i)
    if (contains(i)) s[i - 1] = '1';
  return s;
}

bool LinearConstraint::satisfied_by(std::span<const std::int64_t> x, std::int64_t t) const {
  std::int64_t lhs = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) lhs += coefficients[i] * x[i];
  const std::int64_t bound = rhs * t;
  switch (relation) {
    case Relation::kEqual:
      return lhs == bound;
    case Relation::kLessEqual:
      return lhs <= bound;
    case Relation::kGreaterEqual:
      return lhs >= bound;
  }
  return false;
}

Integer max_ch_upper_bound(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  // min(1/(k+1), 1/(n-k+1)) = 1/max(k+1, n-k+1)
  const std::int64_t d = std::max(k + 1, n - k + 1);
  Integer q;
  const Integer b = binomial(n, k);
  mpz_fdiv_q_ui(q.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d));
  return q;
}

SparsePavingMatroid SparsePavingMatroid::validate(int n, int k, std::vector<SubsetMask> chs,
                                                  Validation mode) {
  if (n < 1 || n > SubsetMask::kMaxGround)
    throw MatroidError("ground set size " + std::to_string(n) + " outside 1..64");
  if (k < 0 || k > n) throw MatroidError("rank " + std::to_string(k) + " outside 0..n");
  for (const auto& h : chs)
    if (!h.within(n) || h.size() != k)
      throw MatroidError("{" + h.to_word(n) + "} is not a k-subset (k = " + std::to_string(k) +
                         ")");
  std::sort(chs.begin(), chs.end());
  if (std::adjacent_find(chs.begin(), chs.end()) != chs.end())
    throw MatroidError("duplicate circuit-hyperplane");

  if (mode == Validation::kFull) {
    for (std::size_t i = 0; i < chs.size(); ++i)
      for (std::size_t j = i + 1; j < chs.size(); ++j)
        if (hamming_distance(chs[i], chs[j]) < 4)
          throw MatroidError(chs[i].to_word(n) + " and " + chs[j].to_word(n) +
                             " are adjacent in Johnson graph J(" + std::to_string(n) + "," +
                             std::to_string(k) + ")");
  }
  if (Integer(static_cast<unsigned long>(chs.size())) > max_ch_upper_bound(n, k))
    throw MatroidError(std::to_string(chs.size()) + " circuit-hyperplanes exceeds circuit-hyperplane bound " +
                       max_ch_upper_bound(n, k).get_str());
  return SparsePavingMatroid(n, k, std::move(chs));
}

SparsePavingMatroid SparsePavingMatroid::uniform(int n, int k) { return validate(n, k, {}); }

bool SparsePavingMatroid::is_circuit_hyperplane(SubsetMask a) const {
  return std::binary_search(chs_.begin(), chs_.end(), a);
}

SparsePavingMatroid SparsePavingMatroid::dual() const {
  std::vector<SubsetMask> comp;
  comp.reserve(chs_.size());
  for (const auto& h : chs_) comp.push_back(h.complement(n_));
  std::sort(comp.begin(), comp.end());
  return SparsePavingMatroid(n_, n_ - k_, std::move(comp));
}

SparsePavingMatroid SparsePavingMatroid::relax(SubsetMask h) const {
  auto it = std::lower_bound(chs_.begin(), chs_.end(), h);
  if (it == chs_.end() || *it != h) throw MatroidError("cannot relax a basis");
  std::vector<SubsetMask> rest = chs_;
  rest.erase(rest.begin() + (it - chs_.begin()));
  return SparsePavingMatroid(n_, k_, std::move(rest));
}

int SparsePavingMatroid::rank_of(SubsetMask a) const {
  const int size = a.size();
  if (size < k_) return size;
  if (size == k_ && is_circuit_hyperplane(a)) return k_ - 1;
  return k_;
}

Integer SparsePavingMatroid::bases_count() const {
  return binomial(n_, k_) - Integer(static_cast<unsigned long>(chs_.size()));
}

std::vector<LinearConstraint> SparsePavingMatroid::facet_description() const {
  using R = LinearConstraint::Relation;
  if (k_ == 0 || k_ == n_) throw MatroidError("degenerate polytope (a point)");
  std::vector<LinearConstraint> rows;
  rows.reserve(2 * n_ + 1 + chs_.size());
  rows.push_back({std::vector<int>(n_, 1), R::kEqual, k_});
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(n_, 0);
    e[i] = 1;
    rows.push_back({e, R::kGreaterEqual, 0});
    rows.push_back({std::move(e), R::kLessEqual, 1});
  }
  for (const auto& h : chs_) {
    std::vector<int> c(n_, 0);
    for (int i : h.elements()) c[i - 1] = 1;
    rows.push_back({std::move(c), R::kLessEqual, k_ - 1});
  }
  return rows;
}

namespace {

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  throw MatroidError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what);
}

// Splits a line into (1-based column, integer) tokens.
std::vector<std::pair<int, long long>> tokenize(const std::string& text, int line) {
  std::vector<std::pair<int, long long>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string tok = text.substr(start, i - start);
    const int column = static_cast<int>(start) + 1;
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        tok.size() > 9)
      parse_fail(line, column, "expected a non-negative integer, got '" + tok + "'");
    out.emplace_back(column, std::stoll(tok));
  }
  return out;
}

}  // namespace

SparsePavingMatroid read_matroid(std::istream& in, Validation mode) {
  std::string text;
  int line = 0;
  bool have_header = false;
  int n = 0;
  int k = 0;
  std::vector<SubsetMask> chs;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    const auto tokens = tokenize(text, line);
    if (!have_header) {
      if (tokens.size() != 2) parse_fail(line, 1, "header must be \"n k\"");
      if (tokens[0].second < 1 || tokens[0].second > SubsetMask::kMaxGround)
        parse_fail(line, tokens[0].first, "n must lie in 1..64");
      n = static_cast<int>(tokens[0].second);
      if (tokens[1].second > n) parse_fail(line, tokens[1].first, "k must lie in 0..n");
      k = static_cast<int>(tokens[1].second);
      have_header = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != k)
      parse_fail(line, 1,
                 "expected " + std::to_string(k) + " elements, got " +
                     std::to_string(tokens.size()));
    std::uint64_t bits = 0;
    long long prev = 0;
    for (const auto& [column, value] : tokens) {
      if (value < 1 || value > n)
        parse_fail(line, column, "element " + std::to_string(value) + " outside 1.." +
                                     std::to_string(n));
      if (value <= prev) parse_fail(line, column, "elements must be strictly increasing");
      prev = value;
      bits |= std::uint64_t{1} << (value - 1);
    }
    chs.emplace_back(bits);
  }
  if (!have_header) parse_fail(line + 1, 1, "missing \"n k\" header");
  return SparsePavingMatroid::validate(n, k, std::move(chs), mode);
}

SparsePavingMatroid read_matroid_file(const std::string& path, Validation mode) {
  std::ifstream in(path);
  if (!in) throw MatroidError("cannot open matroid file '" + path + "'");
  return read_matroid(in, mode);
}

void write_matroid(std::ostream& out, const SparsePavingMatroid& m) {
  out << m.ground_size() << ' ' << m.rank() << '\n';
  for (const auto& h : m.circuit_hyperplanes()) {
    const auto el = h.elements();
    for (std::size_t i = 0; i < el.size(); ++i) out << (i ? " " : "") << el[i];
    out << '\n';
  }
}

}  // namespace spaving
