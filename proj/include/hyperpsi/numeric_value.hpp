#pragma once

#include <string>

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

// Extra decimal places carried beyond the requested precision.
inline constexpr unsigned kGuardDigits = 10;

/// Fixed-point decimal approximation with a certified absolute error bound.
///
/// The approximation is mantissa / 10^scale and the true value lies within
/// error_ulps / 10^scale of it. `precision` is the number of decimal places
/// the caller asked for; scale >= precision carries guard digits.
class NumericValue {
 public:
  NumericValue() = default;
  NumericValue(BigInt mantissa, BigInt error_ulps, unsigned scale, unsigned precision);

  /// Nearest fixed-point value at precision + guard digits, error 1 ulp.
  static NumericValue from_rational(const Rational& x, unsigned precision,
                                    unsigned guard = kGuardDigits);

  const BigInt& mantissa() const { return mantissa_; }
  const BigInt& error_ulps() const { return error_ulps_; }
  unsigned scale() const { return scale_; }
  unsigned precision() const { return precision_; }

  Rational approximation() const;
  Rational error_bound() const;

  /// |approximation − x| <= error_bound, decided exactly.
  bool contains(const Rational& x) const;
  /// |approximation − x| <= tolerance, decided exactly.
  bool within(const Rational& x, const Rational& tolerance) const;

  /// Same value at another scale. Growing is exact; shrinking rounds and
  /// widens the bound accordingly.
  NumericValue rescaled(unsigned new_scale) const;
  NumericValue with_precision(unsigned precision) const;

  /// Approximation rounded half away from zero to `precision` places.
  std::string to_string() const;
  std::string to_string(unsigned digits) const;
  /// Error bound rounded up to two significant digits, e.g. "2.1e-13".
  std::string error_string() const;

  NumericValue operator-() const;
  friend NumericValue operator+(const NumericValue& a, const NumericValue& b);
  friend NumericValue operator-(const NumericValue& a, const NumericValue& b);

  /// Multiplies by an exact rational, rounding once.
  NumericValue scaled_by(const Rational& factor) const;

 private:
  BigInt mantissa_{0};
  BigInt error_ulps_{0};
  unsigned scale_ = 0;
  unsigned precision_ = 0;
};

/// round(x · 10^scale), ties away from zero.
BigInt round_scaled(const Rational& x, unsigned scale);

/// Fixed-point mantissa at `scale` printed with `digits` decimals, rounding
/// half away from zero when digits < scale. Always ASCII, never localized.
std::string format_fixed(const BigInt& mantissa, unsigned scale, unsigned digits);

/// Nonnegative rational printed as an upward-rounded two-digit mantissa and
/// exponent ("0" for zero).
std::string format_upper_bound(const Rational& x);

}  // namespace hyperpsi
