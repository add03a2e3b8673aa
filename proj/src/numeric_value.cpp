#include "hyperpsi/numeric_value.hpp"

#include <algorithm>

namespace hyperpsi {

namespace {

Rational power_of_ten(int e) {
  if (e >= 0) {
    return Rational(pow10(static_cast<unsigned>(e)));
  }
  return Rational::normalize(BigInt(1), pow10(static_cast<unsigned>(-e)));
}

}  // namespace

NumericValue::NumericValue(BigInt mantissa, BigInt error_ulps, unsigned scale, unsigned precision)
    : mantissa_(std::move(mantissa)),
      error_ulps_(std::move(error_ulps)),
      scale_(scale),
      precision_(precision) {}

NumericValue NumericValue::from_rational(const Rational& x, unsigned precision, unsigned guard) {
  const unsigned scale = precision + guard;
  return NumericValue(round_scaled(x, scale), BigInt(1), scale, precision);
}

Rational NumericValue::approximation() const {
  return Rational::normalize(mantissa_, pow10(scale_));
}

Rational NumericValue::error_bound() const {
  return Rational::normalize(error_ulps_, pow10(scale_));
}

bool NumericValue::contains(const Rational& x) const { return within(x, error_bound()); }

bool NumericValue::within(const Rational& x, const Rational& tolerance) const {
  return (approximation() - x).abs() <= tolerance;
}

NumericValue NumericValue::rescaled(unsigned new_scale) const {
  if (new_scale >= scale_) {
    const BigInt f = pow10(new_scale - scale_);
    return NumericValue(mantissa_ * f, error_ulps_ * f, new_scale, precision_);
  }
  const unsigned drop = scale_ - new_scale;
  const BigInt mantissa = round_scaled(approximation(), new_scale);
  // Old error shrinks by 10^drop (rounded up), rounding adds at most half an ulp.
  BigInt err;
  mpz_cdiv_q(err.get_mpz_t(), error_ulps_.get_mpz_t(), pow10(drop).get_mpz_t());
  return NumericValue(mantissa, err + 1, new_scale, precision_);
}

NumericValue NumericValue::with_precision(unsigned precision) const {
  NumericValue out = *this;
  out.precision_ = precision;
  return out;
}

std::string NumericValue::to_string() const { return to_string(precision_); }

std::string NumericValue::to_string(unsigned digits) const {
  return format_fixed(mantissa_, scale_, digits);
}

std::string NumericValue::error_string() const { return format_upper_bound(error_bound()); }

NumericValue NumericValue::operator-() const {
  return NumericValue(-mantissa_, error_ulps_, scale_, precision_);
}

NumericValue operator+(const NumericValue& a, const NumericValue& b) {
  const unsigned scale = std::max(a.scale_, b.scale_);
  const NumericValue x = a.rescaled(scale);
  const NumericValue y = b.rescaled(scale);
  return NumericValue(x.mantissa_ + y.mantissa_, x.error_ulps_ + y.error_ulps_, scale,
                      std::min(a.precision_, b.precision_));
}

NumericValue operator-(const NumericValue& a, const NumericValue& b) { return a + (-b); }

NumericValue NumericValue::scaled_by(const Rational& factor) const {
  const Rational exact = Rational(mantissa_) * factor;
  const BigInt mantissa = round_scaled(exact, 0);
  const BigInt err = (Rational(error_ulps_) * factor.abs()).ceil() + 1;
  return NumericValue(mantissa, err, scale_, precision_);
}

BigInt round_scaled(const Rational& x, unsigned scale) {
  const BigInt num = x.numerator() * pow10(scale);
  const BigInt& den = x.denominator();
  // floor((2|num| + den) / (2 den)) gives round-half-up on the magnitude.
  BigInt mag = ::abs(num) * 2 + den;
  BigInt q;
  BigInt twice_den = den * 2;
  mpz_fdiv_q(q.get_mpz_t(), mag.get_mpz_t(), twice_den.get_mpz_t());
  return num < 0 ? BigInt(-q) : q;
}

std::string format_fixed(const BigInt& mantissa, unsigned scale, unsigned digits) {
  BigInt m = mantissa;
  unsigned s = scale;
  if (digits < scale) {
    m = round_scaled(Rational::normalize(mantissa, pow10(scale)), digits);
    s = digits;
  }
  const bool negative = m < 0;
  std::string body = BigInt(::abs(m)).get_str(10);
  if (s > 0) {
    if (body.size() <= s) {
      body.insert(0, s + 1 - body.size(), '0');
    }
    body.insert(body.size() - s, 1, '.');
  }
  if (digits > s) {
    if (s == 0) {
      body.push_back('.');
    }
    body.append(digits - s, '0');
  }
  return negative ? "-" + body : body;
}

std::string format_upper_bound(const Rational& x) {
  if (x.sign() <= 0) {
    return "0";
  }
  // Find e with 10^e <= x < 10^(e+1).
  int e = static_cast<int>(decimal_digits(x.numerator())) -
          static_cast<int>(decimal_digits(x.denominator()));
  while (x < power_of_ten(e)) {
    --e;
  }
  while (x >= power_of_ten(e + 1)) {
    ++e;
  }
  BigInt m = (x * power_of_ten(1 - e)).ceil();
  if (m >= 100) {
    m = 10;
    ++e;
  }
  const std::string digits = m.get_str(10);
  return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
}

}  // namespace hyperpsi
