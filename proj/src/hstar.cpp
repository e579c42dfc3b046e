#include "spaving/ehrhart.hpp"

#include <stdexcept>

namespace spaving {

std::vector<Rational> hstar(const Polynomial& p, int dim) {
  if (dim < 0 || p.degree() != dim) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> values(static_cast<std::size_t>(dim) + 1);
  for (int t = 0; t <= dim; ++t) values[t] = p(Rational(t));
  // h*(z) = (1 - z)^(dim+1) sum_t p(t) z^t, truncated at degree dim.
  std::vector<Rational> h(static_cast<std::size_t>(dim) + 1, Rational(0));
  for (int i = 0; i <= dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      const Rational term = Rational(binomial(dim + 1, j)) * values[i - j];
      if (j % 2 == 0)
        h[i] += term;
      else
        h[i] -= term;
    }
  }
  return h;
}

int count_distinct_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has infinitely many roots");
  if (p.degree() == 0) return 0;
  std::vector<Polynomial> chain{p, derivative(p)};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial r = poly_divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  auto sign_changes = [&](bool at_minus_infinity) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
      int s = sgn(q.coefficients().back());
      if (at_minus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  return sign_changes(true) - sign_changes(false);
}

bool is_real_rooted(const std::vector<Rational>& coeffs) {
  const Polynomial p(coeffs);
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;
  const Polynomial squarefree = poly_divmod(p, poly_gcd(p, derivative(p))).first;
  return count_distinct_real_roots(squarefree) == squarefree.degree();
}

}  // namespace spaving
