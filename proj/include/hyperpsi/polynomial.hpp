#pragma once

#include <vector>

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

/// Dense univariate polynomial with exact rational coefficients; coeff(i)
/// multiplies x^i. Used to certify tail bounds of hypergeometric series.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// x + c
  static Polynomial linear(const Rational& c);
  /// c · x^n
  static Polynomial monomial(const Rational& c, std::size_t n);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  /// P(x + s).
  Polynomial shifted(const Rational& s) const;

  /// Sufficient test for P(x) >= 0 on [start, ∞): every coefficient of
  /// P(start + y) is nonnegative.
  bool nonnegative_from(const Rational& start) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Π (x + r_i).
Polynomial from_negated_roots(const std::vector<Rational>& shifts);

}  // namespace hyperpsi
