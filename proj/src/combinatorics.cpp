#include "hyperpsi/combinatorics.hpp"

namespace hyperpsi {

namespace {

// Σ_{k=lo}^{hi-1} 1/k as an unreduced fraction num/den.
void harmonic_range(Nat lo, Nat hi, BigInt& num, BigInt& den) {
  if (hi - lo == 1) {
    num = 1;
    den = static_cast<unsigned long>(lo);
    return;
  }
  const Nat mid = lo + (hi - lo) / 2;
  BigInt ln, ld, rn, rd;
  harmonic_range(lo, mid, ln, ld);
  harmonic_range(mid, hi, rn, rd);
  num = ln * rd + rn * ld;
  den = ld * rd;
}

}  // namespace

Rational pochhammer(const Rational& lambda, Nat n) {
  // (p/q)(p/q+1)...(p/q+n-1) = Π(p + i q) / q^n, reduced once at the end.
  const BigInt p = lambda.numerator();
  const BigInt q = lambda.denominator();
  BigInt num = 1;
  BigInt den = 1;
  BigInt factor = p;
  for (Nat i = 0; i < n; ++i) {
    num *= factor;
    if (num == 0) {
      return Rational(0);
    }
    den *= q;
    factor += q;
  }
  return Rational::normalize(num, den);
}

Rational harmonic(Nat m) {
  Rational sum(0);
  for (Nat k = 1; k <= m; ++k) {
    sum += Rational::normalize(BigInt(1), BigInt(static_cast<unsigned long>(k)));
  }
  return sum;
}

Rational harmonic_split(Nat m) {
  if (m == 0) {
    return Rational(0);
  }
  BigInt num, den;
  harmonic_range(1, m + 1, num, den);
  return Rational::normalize(num, den);
}

Rational factorial(Nat n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

}  // namespace hyperpsi
