#include "spaving/polynomial.hpp"

#include <stdexcept>

namespace spaving {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  strip();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int m) const {
  if (m < 0 || m >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[m];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += to_fraction_string(coeffs_[i]);
  }
  return s;
}

Polynomial binom_poly(std::int64_t a, std::int64_t b) {
  if (b < 0) return {};
  // Integer coefficients of (t+a)(t+a-1)...(t+a-b+1), divided by b! at the end.
  std::vector<Integer> prod{Integer(1)};
  for (std::int64_t i = 0; i < b; ++i) {
    const Integer root(static_cast<long>(a - i));
    std::vector<Integer> next(prod.size() + 1, Integer(0));
    for (std::size_t j = 0; j < prod.size(); ++j) {
      next[j + 1] += prod[j];
      next[j] += prod[j] * root;
    }
    prod = std::move(next);
  }
  const Integer den = factorial(b);
  std::vector<Rational> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) coeffs.push_back(make_rational(c, den));
  return Polynomial(std::move(coeffs));
}

Polynomial poly_shift(const Polynomial& p, const Rational& c) {
  if (p.is_zero() || c == 0) return p;
  const int d = p.degree();
  // [t^j] p(t+c) = sum_{i >= j} a_i C(i, j) c^(i-j)
  std::vector<Rational> powers(d + 1);
  powers[0] = 1;
  for (int i = 1; i <= d; ++i) powers[i] = powers[i - 1] * c;
  std::vector<Rational> out(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    const Rational& a = p.coefficients()[i];
    if (a == 0) continue;
    for (int j = 0; j <= i; ++j) out[j] += a * Rational(binomial(i, j)) * powers[i - j];
  }
  return Polynomial(std::move(out));
}

Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw std::invalid_argument("degenerate interpolation input");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("degenerate interpolation input");

  // Newton divided differences, in place.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  // Horner on the Newton form.
  Polynomial result = Polynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Polynomial({-points[i].first, Rational(1)});
    result += Polynomial::constant(dd[i]);
  }
  return result;
}

Polynomial interpolate_at_naturals(std::span<const Integer> values) {
  if (values.empty()) throw std::invalid_argument("degenerate interpolation input");
  const std::size_t n = values.size();
  const std::size_t d = n - 1;

  // Forward differences: diff[j] = Delta^j p(0).
  std::vector<Integer> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) diff[i] -= diff[i - 1];

  // p(t) = sum_j diff[j] C(t, j) = (1/d!) sum_j diff[j] (d!/j!) t(t-1)...(t-j+1).
  std::vector<Integer> acc(n, Integer(0));
  std::vector<Integer> falling{Integer(1)};
  std::vector<Integer> scale(n);
  scale[d] = 1;
  for (std::size_t j = d; j-- > 0;) scale[j] = scale[j + 1] * static_cast<unsigned long>(j + 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (diff[j] != 0) {
      const Integer w = diff[j] * scale[j];
      for (std::size_t i = 0; i < falling.size(); ++i) acc[i] += w * falling[i];
    }
    // falling *= (t - j)
    std::vector<Integer> next(falling.size() + 1, Integer(0));
    const Integer root(static_cast<long>(j));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * root;
    }
    falling = std::move(next);
  }
  const Integer den = factorial(static_cast<std::int64_t>(d));
  std::vector<Rational> coeffs;
  coeffs.reserve(n);
  for (const auto& c : acc) coeffs.push_back(make_rational(c, den));
  return Polynomial(std::move(coeffs));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coefficients()[i] * i;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = bc.back();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const Rational f = rem[i] / lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.coefficients().back());
}

}  // namespace spaving
