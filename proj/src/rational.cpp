#include "hyperpsi/rational.hpp"

#include <cctype>
#include <ostream>

#include "hyperpsi/errors.hpp"

namespace hyperpsi {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid character in rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::normalize(const BigInt& p, const BigInt& q) {
  if (q == 0) {
    throw DomainError("rational with zero denominator");
  }
  Rational r;
  r.value_ = mpq_class(p, q);
  r.value_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  BigInt p = parse_integer(text.substr(0, slash), whole);
  BigInt q = 1;
  if (slash != std::string_view::npos) {
    q = parse_integer(text.substr(slash + 1), whole);
  }
  if (negative) {
    p = -p;
  }
  return normalize(p, q);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DomainError("reciprocal of zero");
  }
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str(10);
  }
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::size_t decimal_digits(const BigInt& n) {
  if (n == 0) {
    return 1;
  }
  // mpz_sizeinbase may overshoot by one for base 10.
  const BigInt a = ::abs(n);
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);
  if (d > 1 && a < pow10(static_cast<unsigned>(d - 1))) {
    --d;
  }
  return d;
}

BigInt pow10(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace hyperpsi
