#include "hyperpsi/numeric_series.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hyperpsi/errors.hpp"
#include "hyperpsi/polynomial.hpp"

namespace hyperpsi {

namespace {

// Truncated power series in x = 1/k, `coeffs[i]` multiplying x^i.
using PowerSeries = std::vector<Rational>;

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, std::size_t len) {
  PowerSeries c(len, Rational(0));
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

PowerSeries series_div(const PowerSeries& num, const PowerSeries& den, std::size_t len) {
  PowerSeries q(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    Rational acc = i < num.size() ? num[i] : Rational(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) {
      acc -= den[j] * q[i - j];
    }
    q[i] = acc / den[0];
  }
  return q;
}

// (1 + x)^e for rational e.
PowerSeries binomial_series(const Rational& e, std::size_t len) {
  PowerSeries s(len, Rational(0));
  Rational c(1);
  for (std::size_t r = 0; r < len; ++r) {
    s[r] = c;
    c = c * (e - Rational(static_cast<std::int64_t>(r))) /
        Rational(static_cast<std::int64_t>(r + 1));
  }
  return s;
}

// A(k)/k^d as a series in 1/k: the coefficient list of A reversed.
PowerSeries reversed(const Polynomial& p) {
  PowerSeries s(p.coefficients().rbegin(), p.coefficients().rend());
  return s;
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) {
    out = out * p;
  }
  return out;
}

// Tail estimate g(k) = G(k)/k^(M-1) and the residual δ(k) = N(k)/E(k).
struct TailEstimator {
  unsigned order = 0;
  Polynomial g_num;
  Polynomial residual_num;
  Polynomial residual_den;
  // N(k)·k^(M+1); bounded by D·E(k) on the certified range.
  Polynomial scaled_residual;
};

TailEstimator build_estimator(const Polynomial& upper, const Polynomial& lower, unsigned order) {
  const std::size_t len = order + 2;
  const PowerSeries ratio = series_div(reversed(upper), reversed(lower), len);

  // h_i = ratio·(1+x)^(1-i) - 1; coefficient j of δ is
  // [j=0] + Σ_{i<=j} c_i h_i[j-i+1], solved for c_j since h_j[1] = -(s+j).
  std::vector<PowerSeries> h(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    h[i] = series_mul(ratio, binomial_series(Rational(1 - static_cast<std::int64_t>(i)), len), len);
    h[i][0] -= Rational(1);
  }
  std::vector<Rational> c(order + 1, Rational(0));
  for (unsigned j = 0; j <= order; ++j) {
    Rational acc(j == 0 ? 1 : 0);
    for (unsigned i = 0; i < j; ++i) {
      acc += c[i] * h[i][j - i + 1];
    }
    c[j] = -acc / h[j][1];
  }

  std::vector<Rational> g(order + 1, Rational(0));
  for (unsigned i = 0; i <= order; ++i) {
    g[order - i] = c[i];
  }
  TailEstimator est;
  est.order = order;
  est.g_num = Polynomial(std::move(g));
  const Polynomial k_pow = Polynomial::monomial(Rational(1), order - 1);
  const Polynomial k1_pow = power(Polynomial::linear(Rational(1)), order - 1);
  est.residual_den = lower * k_pow * k1_pow;
  est.residual_num = est.residual_den - est.g_num * lower * k1_pow +
                     upper * est.g_num.shifted(Rational(1)) * k_pow;
  const int expected = lower.degree() + static_cast<int>(order) - 3;
  if (est.residual_num.degree() > expected) {
    throw std::logic_error("tail estimator residual has degree " +
                           std::to_string(est.residual_num.degree()) + ", expected <= " +
                           std::to_string(expected));
  }
  est.scaled_residual = est.residual_num * Polynomial::monomial(Rational(1), order + 1);
  return est;
}

// Smallest tried D with |N(k)|·k^(M+1) <= D·E(k) on [start, ∞), if provable.
std::optional<Rational> certify_residual(const TailEstimator& est, const Rational& start) {
  if (est.residual_num.degree() < 0) {
    return Rational(0);
  }
  const Polynomial& s = est.scaled_residual;
  const Polynomial& e = est.residual_den;
  const auto top = static_cast<std::size_t>(e.degree());
  const Rational lead = s.coeff(top).abs() / e.coeff(top);
  const Rational at_start = s(start).abs() / e(start);
  const Rational base = std::max(lead, at_start) * Rational::normalize(9, 8);
  for (const std::int64_t mult : {1, 2, 4, 16}) {
    const Rational d = base * Rational(mult);
    if ((d * e - s).nonnegative_from(start) && (d * e + s).nonnegative_from(start)) {
      return d;
    }
  }
  return std::nullopt;
}

BigInt ceil_scaled(const Rational& x) { return x.ceil(); }

// round(num/den) for den > 0, ties away from zero.
BigInt div_round(const BigInt& num, const BigInt& den) {
  return round_scaled(Rational::normalize(num, den), 0);
}

Rational rational_power(const Rational& x, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) {
    out *= x;
  }
  return out;
}

struct Checkpoint {
  BigInt value;
  BigInt error;
  TailMethod method = TailMethod::geometric;
  unsigned order = 0;
  Rational tail;
};

}  // namespace

Rational parametric_excess(const SeriesSpec& spec) {
  Rational s(0);
  for (const Rational& b : spec.denominator_params) {
    s += b;
  }
  for (const Rational& a : spec.numerator_params) {
    s -= a;
  }
  return s;
}

NumericSeriesResult pfq_numeric_unit_detailed(const SeriesSpec& spec, unsigned precision,
                                              Nat max_terms) {
  spec.validate();
  if (spec.argument != Rational(1)) {
    throw DomainError("numeric evaluation is defined at unit argument only, got z = " +
                      spec.argument.to_string());
  }
  const unsigned scale = precision + kGuardDigits;

  if (const auto order = spec.terminating_order()) {
    const TruncatedSum exact = truncated_pfq(spec, *order);
    return NumericSeriesResult{NumericValue::from_rational(exact.value, precision),
                               exact.terms_used, TailMethod::exact, 0, Rational(0)};
  }

  const std::size_t p = spec.numerator_params.size();
  const std::size_t d = spec.denominator_params.size() + 1;
  if (p > d) {
    throw DivergenceError(spec.to_string() + " diverges at z = 1 (p > q + 1)");
  }
  const bool ratio_to_one = p == d;
  if (ratio_to_one && parametric_excess(spec).sign() <= 0) {
    throw DivergenceError(spec.to_string() + " has nonpositive parametric excess " +
                          parametric_excess(spec).to_string());
  }

  std::vector<Rational> lower_shifts = spec.denominator_params;
  lower_shifts.push_back(Rational(1));
  const Polynomial upper = from_negated_roots(spec.numerator_params);
  const Polynomial lower = from_negated_roots(lower_shifts);

  // Both factor products keep a fixed sign from here on.
  Rational most_negative(0);
  for (const Rational& r : spec.numerator_params) {
    most_negative = std::max(most_negative, -r);
  }
  for (const Rational& r : lower_shifts) {
    most_negative = std::max(most_negative, -r);
  }
  auto factors_positive = [&](const Rational& k) { return k > most_negative; };

  std::vector<TailEstimator> estimators;
  if (ratio_to_one) {
    // Higher orders pay off only at high precision, and cost O(M^2) to certify.
    const unsigned max_order = std::max(16U, precision);
    for (unsigned order = 2; order <= max_order;
         order = order < 16 ? (order < 4 ? order * 2 : order + 4) : order * 3 / 2) {
      estimators.push_back(build_estimator(upper, lower, order));
    }
  }
  const Rational half = Rational::normalize(1, 2);
  const Polynomial geometric_gap = half * lower - upper;
  const Polynomial monotone_gap = lower - upper;

  const BigInt target = pow10(kGuardDigits);
  BigInt term = pow10(scale);
  BigInt term_err = 0;
  BigInt sum = 0;
  BigInt sum_err = 0;
  Nat k = 0;

  BigInt max_param = most_negative.ceil();
  for (const Rational& a : spec.numerator_params) {
    max_param = std::max(max_param, a.abs().ceil());
  }
  for (const Rational& b : spec.denominator_params) {
    max_param = std::max(max_param, b.abs().ceil());
  }
  Nat checkpoint = std::max<Nat>(32, 2 * max_param.get_ui() + 2);
  std::optional<Checkpoint> best;

  auto evaluate = [&]() -> std::optional<Checkpoint> {
    const Rational at(static_cast<std::int64_t>(k));
    if (!factors_positive(at)) {
      return std::nullopt;
    }
    const BigInt term_mag = ::abs(term) + term_err;
    std::optional<Checkpoint> out;
    if (!ratio_to_one) {
      if (geometric_gap.nonnegative_from(at)) {
        const BigInt tail = term_mag * 2;
        out = Checkpoint{sum, sum_err + tail, TailMethod::geometric, 0,
                         Rational::normalize(tail, pow10(scale))};
      }
      return out;
    }
    if (!monotone_gap.nonnegative_from(at)) {
      return std::nullopt;
    }
    for (const TailEstimator& est : estimators) {
      const auto bound = certify_residual(est, at);
      if (!bound) {
        continue;
      }
      const unsigned m = est.order;
      const Rational g_at = est.g_num(at) / rational_power(at, m - 1);
      const Rational tail_sum = rational_power(at, m + 1).reciprocal() +
                                rational_power(at, m).reciprocal() / Rational(m);
      const BigInt tail = ceil_scaled(Rational(term_mag) * *bound * tail_sum);
      const BigInt estimate = round_scaled(Rational(term) * g_at, 0);
      const BigInt estimate_err = ceil_scaled(Rational(term_err) * g_at.abs()) + 1;
      const BigInt total_err = sum_err + estimate_err + tail;
      if (!out || total_err < out->error) {
        out = Checkpoint{sum + estimate, total_err, TailMethod::asymptotic, m,
                         Rational::normalize(tail, pow10(scale))};
      }
    }
    return out;
  };

  while (true) {
    const Nat stop = std::min(checkpoint, max_terms);
    while (k < stop) {
      sum += term;
      sum_err += term_err;
      // t_{k+1} = t_k · Π(k + a_i) / ((k+1) Π(k + b_j))
      const Rational at(static_cast<std::int64_t>(k));
      Rational ratio = upper(at) / lower(at);
      const BigInt rn = ratio.numerator() * term;
      term = div_round(rn, ratio.denominator());
      term_err = ceil_scaled(Rational(term_err) * ratio.abs()) + 1;
      ++k;
    }
    if (auto cp = evaluate()) {
      if (!best || cp->error < best->error) {
        best = cp;
      }
      if (cp->error <= target) {
        return NumericSeriesResult{NumericValue(cp->value, cp->error, scale, precision), k,
                                   cp->method, cp->order, cp->tail};
      }
    }
    if (k >= max_terms) {
      std::optional<NumericValue> partial;
      if (best) {
        partial = NumericValue(best->value, best->error, scale, precision);
      }
      throw ConvergenceError(spec.to_string() + ": tolerance 1e-" + std::to_string(precision) +
                                 " not reached within " + std::to_string(max_terms) + " terms",
                             partial, k);
    }
    checkpoint = checkpoint + checkpoint / 2;
  }
}

}  // namespace hyperpsi
