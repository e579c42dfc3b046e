// Dense univariate polynomials in t with exact rational coefficients.

#ifndef SPAVING_POLYNOMIAL_HPP
#define SPAVING_POLYNOMIAL_HPP

#include "spaving/numbers.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spaving {

class Polynomial {
 public:
  /// Degree reported by the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  /// coefficients[m] is the coefficient of t^m. Trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The monomial t.
  static Polynomial identity();

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  /// [t^m]; zero for m outside 0..degree.
  Rational coefficient(int m) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Coefficients from constant to leading term, comma separated.
  std::string to_string() const;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

/// C(t + a, b) = (t+a)(t+a-1)...(t+a-b+1) / b!, as a polynomial of degree b.
Polynomial binom_poly(std::int64_t a, std::int64_t b);

/// q(t) = p(t + c), expanded with the binomial theorem.
Polynomial poly_shift(const Polynomial& p, const Rational& c);

/// The unique polynomial of degree < points.size() through all points.
/// Throws std::invalid_argument("degenerate interpolation input") on an
/// empty list or a repeated abscissa.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Interpolates values[i] at t = i, i = 0..values.size()-1.
Polynomial interpolate_at_naturals(std::span<const Integer> values);

Polynomial derivative(const Polynomial& p);

/// Euclidean division a = q*b + r with deg r < deg b. Throws
/// std::domain_error when b is zero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; zero when both inputs are zero.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace spaving

#endif  // SPAVING_POLYNOMIAL_HPP
