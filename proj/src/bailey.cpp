#include "hyperpsi/bailey.hpp"

#include <algorithm>
#include <array>

#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/gamma.hpp"

namespace hyperpsi {

namespace {

// Γ(x + a) / Γ(x) for integer a.
Rational gamma_shift(const Rational& x, const BigInt& a) {
  if (a >= 0) {
    return pochhammer(x, static_cast<Nat>(a.get_ui()));
  }
  const BigInt m = -a;
  return pochhammer(x - Rational(m), static_cast<Nat>(m.get_ui())).reciprocal();
}

void check_poles(const Rational& a, const Rational& b, Nat n) {
  const Rational shift(static_cast<std::int64_t>(n + 1));
  const std::array<std::pair<const char*, Rational>, 3> args{{
      {"a+n+1", a + shift},
      {"b+n+1", b + shift},
      {"a+b+n+1", a + b + shift},
  }};
  for (const auto& [name, value] : args) {
    if (value.is_nonpositive_integer()) {
      throw DomainError(std::string("gamma pole: ") + name + " = " + value.to_string());
    }
  }
}

struct Interval {
  Rational lo;
  Rational hi;

  static Interval around(const NumericValue& v) {
    return {v.approximation() - v.error_bound(), v.approximation() + v.error_bound()};
  }

  Interval operator*(const Interval& o) const {
    const std::array<Rational, 4> p{lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
  }

  Interval reciprocal() const {
    if (lo.sign() <= 0 && hi.sign() >= 0) {
      throw DomainError("gamma bracket contains zero");
    }
    return {hi.reciprocal(), lo.reciprocal()};
  }
};

}  // namespace

SeriesSpec gauss_collapse_spec(const Rational& a, const Rational& b) {
  return SeriesSpec{{a, b}, {a + b + Rational(1)}, Rational(1)};
}

Rational gauss_truncated_closed_form(const Rational& a, const Rational& b, Nat n) {
  const Rational c = a + b + Rational(1);
  if (c.is_nonpositive_integer()) {
    throw DomainError("a+b+1 = " + c.to_string() + " is a nonpositive integer");
  }
  const Rational one(1);
  return pochhammer(a + one, n) * pochhammer(b + one, n) / (pochhammer(c, n) * factorial(n));
}

SeriesSpec bailey_lhs_spec(const Rational& a, const Rational& b, const Rational& f, Nat n) {
  const Rational nn(static_cast<std::int64_t>(n));
  return SeriesSpec{{a, b, f + nn}, {f, a + b + nn + Rational(1)}, Rational(1)};
}

std::optional<Rational> bailey_prefactor_exact(const Rational& a, const Rational& b, Nat n) {
  check_poles(a, b, n);
  const Rational n1(static_cast<std::int64_t>(n + 1));
  // Symmetric in a and b; shift by whichever one is an integer.
  if (a.is_integer()) {
    return gamma_shift(b + n1, a.numerator()) / gamma_shift(n1, a.numerator());
  }
  if (b.is_integer()) {
    return gamma_shift(a + n1, b.numerator()) / gamma_shift(n1, b.numerator());
  }
  return std::nullopt;
}

Rational bailey_rhs_exact(const Rational& a, const Rational& b, const Rational& f, Nat n) {
  const auto prefactor = bailey_prefactor_exact(a, b, n);
  if (!prefactor) {
    throw DomainError("exact prefactor needs an integer a or b");
  }
  return *prefactor * truncated_pfq(SeriesSpec{{a, b}, {f}, Rational(1)}, n).value;
}

NumericValue bailey_3f2_value(const Rational& a, const Rational& b, const Rational& f, Nat n,
                              unsigned precision, BaileyOptions options) {
  if (options.enforce_condition && f < a + b) {
    throw PreconditionError("f = " + f.to_string() + " < a + b = " + (a + b).to_string());
  }
  SeriesSpec{{}, {f}, Rational(1)}.validate();
  check_poles(a, b, n);
  const Rational sum = truncated_pfq(SeriesSpec{{a, b}, {f}, Rational(1)}, n).value;
  if (const auto prefactor = bailey_prefactor_exact(a, b, n)) {
    return NumericValue::from_rational(*prefactor * sum, precision);
  }

  const unsigned scale = precision + kGuardDigits;
  const Rational n1(static_cast<std::int64_t>(n + 1));
  const Rational target = Rational::normalize(BigInt(1), pow10(precision));
  unsigned working = scale + 10;
  for (int attempt = 0;; ++attempt) {
    const Interval top = Interval{factorial(n), factorial(n)} *
                         Interval::around(gamma_numeric(a + b + n1, working));
    const Interval bottom = Interval::around(gamma_numeric(a + n1, working)) *
                            Interval::around(gamma_numeric(b + n1, working));
    const Interval s{sum, sum};
    const Interval value = top * bottom.reciprocal() * s;
    const Rational mid = (value.lo + value.hi) / Rational(2);
    const Rational radius = (value.hi - value.lo) / Rational(2);
    NumericValue out(round_scaled(mid, scale), (radius * Rational(pow10(scale))).ceil() + 1,
                     scale, precision);
    if (out.error_bound() <= target || attempt == 4) {
      return out;
    }
    working *= 2;
  }
}

}  // namespace hyperpsi
