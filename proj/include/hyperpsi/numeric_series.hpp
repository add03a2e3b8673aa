#pragma once

#include <optional>
#include <stdexcept>

#include "hyperpsi/numeric_value.hpp"
#include "hyperpsi/series.hpp"

namespace hyperpsi {

inline constexpr Nat kDefaultMaxTerms = 1'000'000;

/// Raised when max_terms is exhausted before the requested tolerance. The
/// partial result, when present, carries an honest (but too wide) bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::optional<NumericValue> partial, Nat terms)
      : std::runtime_error(what), partial_(std::move(partial)), terms_(terms) {}

  const std::optional<NumericValue>& partial() const { return partial_; }
  Nat terms() const { return terms_; }

 private:
  std::optional<NumericValue> partial_;
  Nat terms_;
};

enum class TailMethod {
  exact,       // terminating series, summed exactly
  geometric,   // term ratio -> 0: geometric majorant
  asymptotic,  // term ratio -> 1: asymptotic tail estimate + certified remainder
};

struct NumericSeriesResult {
  NumericValue value;
  Nat terms_summed = 0;
  TailMethod method = TailMethod::exact;
  // Order of the asymptotic tail estimate (asymptotic method only).
  unsigned tail_order = 0;
  // Certified bound on the part of the tail that is not summed or estimated.
  Rational tail_bound;
};

/// Σ (a_p)_k/(b_q)_k/k! at z = 1 to within 10^-precision.
///
/// Terminating series are summed exactly. Otherwise the series must have
/// p <= q + 1 and, for p = q + 1, positive parametric excess
/// s = Σb − Σa; anything else throws DivergenceError. Terms are generated by
/// the fixed-point ratio recurrence with tracked rounding error; the tail
/// after K terms is estimated as t_K·g(K), with g(k) = Σ c_i k^(1−i) chosen
/// so that t_k·g(k) − t_{k+1}·g(k+1) = t_k·(1 − δ(k)), δ(k) = O(k^-(M+1)),
/// and Σ_{k>=K} t_k δ(k) is bounded after proving 0 < t_{k+1}/t_k <= 1
/// and |δ(k)|·k^(M+1) <= D on [K, ∞) by exact polynomial positivity.
NumericSeriesResult pfq_numeric_unit_detailed(const SeriesSpec& spec, unsigned precision,
                                              Nat max_terms = kDefaultMaxTerms);

inline NumericValue pfq_numeric_unit(const SeriesSpec& spec, unsigned precision,
                                     Nat max_terms = kDefaultMaxTerms) {
  return pfq_numeric_unit_detailed(spec, precision, max_terms).value;
}

/// Σb − Σa.
Rational parametric_excess(const SeriesSpec& spec);

}  // namespace hyperpsi
