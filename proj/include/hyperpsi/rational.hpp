#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hyperpsi {

using BigInt = mpz_class;

// Nonnegative index type for truncation orders, term counts and table rows.
using Nat = std::uint64_t;

/// Exact rational number p/q, always kept in lowest terms with q > 0.
///
/// Every value produced by a public operation is canonical, so structural
/// equality of numerator and denominator is value equality and the string
/// form is unique. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);
  explicit Rational(const mpq_class& value);

  /// Reduces p/q; throws DomainError when q == 0.
  static Rational normalize(const BigInt& p, const BigInt& q);
  static Rational normalize(std::int64_t p, std::int64_t q) {
    return normalize(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
  }

  /// Parses "p/q", "p" or "-p/q" (optional leading '+'/'-', decimal digits).
  /// The input need not be reduced. Throws ParseError or DomainError.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_negative() const { return sgn(value_) < 0; }
  // True for 0, -1, -2, ...: the poles of Γ and the forbidden lower parameters.
  bool is_nonpositive_integer() const { return is_integer() && sgn(value_) <= 0; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;

  /// Floor and ceiling as big integers.
  BigInt floor() const;
  BigInt ceil() const;

  /// Canonical "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Base-10 digits of |n| (1 for zero).
std::size_t decimal_digits(const BigInt& n);

/// 10^e as a big integer.
BigInt pow10(unsigned e);

}  // namespace hyperpsi
