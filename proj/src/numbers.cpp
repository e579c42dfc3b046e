#include "spaving/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace spaving {

namespace {

// Rows of Pascal's triangle are kept up to this n; larger arguments go
// straight to mpz_bin_uiui.
constexpr std::int64_t kPascalRows = 200;

class PascalTable {
 public:
  Integer get(std::int64_t n, std::int64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      const auto r = static_cast<std::int64_t>(rows_.size());
      std::vector<Integer> row(r + 1);
      row[0] = 1;
      row[r] = 1;
      for (std::int64_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

// columns_[m][n] = [n over m]. Column m is extended with
//   [n over m] = (n-1) [n-1 over m] + [n-1 over m-1].
class StirlingTable {
 public:
  Integer get(std::int64_t n, std::int64_t m) {
    {
      std::shared_lock lock(mutex_);
      if (m < static_cast<std::int64_t>(columns_.size()) &&
          n < static_cast<std::int64_t>(columns_[m].size()))
        return columns_[m][n];
    }
    std::unique_lock lock(mutex_);
    extend(n, m);
    return columns_[m][n];
  }

 private:
  void extend(std::int64_t n, std::int64_t m) {
    if (columns_.empty()) columns_.push_back({Integer(1)});
    while (static_cast<std::int64_t>(columns_.size()) <= m) columns_.emplace_back();
    for (std::int64_t c = 0; c <= m; ++c) {
      auto& col = columns_[c];
      while (static_cast<std::int64_t>(col.size()) <= n) {
        const auto r = static_cast<std::int64_t>(col.size());
        if (r == 0) {
          col.emplace_back(c == 0 ? 1 : 0);
          continue;
        }
        Integer v = col[r - 1] * static_cast<unsigned long>(r - 1);
        if (c > 0) v += columns_[c - 1][r - 1];
        col.push_back(std::move(v));
      }
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> columns_;
};

PascalTable& pascal() {
  static PascalTable table;
  return table;
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (!is_int(num, true) || !is_int(den, false))
    throw std::invalid_argument("malformed fraction '" + text + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(p, d);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kPascalRows) return pascal().get(n, k);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer stirling1_unsigned(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return stirling_table().get(n, m);
}

Rational harmonic(std::int64_t n) {
  // Summed over a common denominator n! and reduced once at the end.
  if (n <= 0) return 0;
  Integer num = 0;
  Integer den = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    // num/den + 1/i
    num = num * static_cast<unsigned long>(i) + den;
    den *= static_cast<unsigned long>(i);
    if (i % 64 == 0) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      num /= g;
      den /= g;
    }
  }
  return make_rational(num, den);
}

Rational harmonic2(std::int64_t n) {
  Rational sum = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    Integer sq = Integer(static_cast<long>(i)) * static_cast<long>(i);
    sum += Rational(1, sq);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace spaving
