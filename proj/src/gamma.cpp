#include "hyperpsi/gamma.hpp"

#include <mpfr.h>

#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/errors.hpp"

namespace hyperpsi {

namespace {

class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrFloat() { mpfr_clear(value_); }
  MpfrFloat(const MpfrFloat&) = delete;
  MpfrFloat& operator=(const MpfrFloat&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

std::size_t bit_length(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace

NumericValue gamma_numeric(const Rational& x, unsigned precision) {
  if (x.is_nonpositive_integer()) {
    throw DomainError("gamma pole at x = " + x.to_string());
  }
  const unsigned scale = precision + kGuardDigits;

  // Γ(x) = factor · Γ(y) with y = x - floor(x) + 1 in [1, 2).
  const BigInt fl = x.floor();
  const Rational y = x - Rational(fl) + Rational(1);
  Rational factor(1);
  if (fl >= 1) {
    factor = pochhammer(y, static_cast<Nat>(BigInt(fl - 1).get_ui()));
  } else {
    factor = pochhammer(x, static_cast<Nat>(BigInt(1 - fl).get_ui())).reciprocal();
  }
  if (y == Rational(1)) {
    return NumericValue::from_rational(factor, precision);
  }

  // |Γ'| <= 0.58 on [1, 2], so rounding y costs at most 2^(1-prec) and the
  // correctly rounded Γ(ỹ) <= 1 adds at most 2^-prec: 3·2^-prec in total.
  const Rational mag = factor.abs();
  const std::size_t mag_bits =
      bit_length(mag.numerator()) + 1 - std::min(bit_length(mag.numerator()),
                                                 bit_length(mag.denominator()));
  const auto bits = static_cast<mpfr_prec_t>(mag_bits + scale * 10 / 3 + 8);

  MpfrFloat arg(bits);
  MpfrFloat result(bits);
  mpfr_set_q(arg.get(), y.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_gamma(result.get(), arg.get(), MPFR_RNDN);
  mpq_class gy;
  mpfr_get_q(gy.get_mpq_t(), result.get());

  const Rational value = factor * Rational(gy);
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  const Rational err = mag * Rational(3) / Rational(two_pow);
  const BigInt err_ulps = (err * Rational(pow10(scale))).ceil() + 1;
  return NumericValue(round_scaled(value, scale), err_ulps, scale, precision);
}

}  // namespace hyperpsi
