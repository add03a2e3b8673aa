#include "hyperpsi/polynomial.hpp"

#include <algorithm>

namespace hyperpsi {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t n) {
  std::vector<Rational> v(n + 1, Rational(0));
  v[n] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Horner-style Taylor shift: O(n^2) exact operations.
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      c[j - 1] += s * c[j];
    }
  }
  return Polynomial(std::move(c));
}

bool Polynomial::nonnegative_from(const Rational& start) const {
  const Polynomial p = shifted(start);
  return std::all_of(p.coeffs_.begin(), p.coeffs_.end(),
                     [](const Rational& c) { return c.sign() >= 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  return *this += Rational(-1) * rhs;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    return Polynomial();
  }
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (Rational& x : c) {
    x *= s;
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Polynomial from_negated_roots(const std::vector<Rational>& shifts) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const Rational& r : shifts) {
    p = p * Polynomial::linear(r);
  }
  return p;
}

}  // namespace hyperpsi
