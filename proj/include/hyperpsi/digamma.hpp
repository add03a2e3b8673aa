#pragma once

#include <string>
#include <string_view>

#include "hyperpsi/numeric_series.hpp"
#include "hyperpsi/numeric_value.hpp"
#include "hyperpsi/rational.hpp"

namespace hyperpsi {

/// Fractional digits of γ = 0.5772156649...
extern const std::string_view kEulerGammaDigits;

/// Largest precision gamma_constant() serves; the remaining stored digits
/// feed rounding and internal guard digits.
inline constexpr unsigned kMaxGammaPrecision = 1000;

/// ψ(n) = gamma_coefficient·γ + rational_part with γ kept symbolic.
struct DigammaExact {
  int gamma_coefficient = -1;
  Rational rational_part;

  /// "-γ + p/q", "-γ - p/q" or "-γ".
  std::string to_string() const;
  /// Inverse of to_string(); throws ParseError.
  static DigammaExact parse(std::string_view text);

  friend bool operator==(const DigammaExact&, const DigammaExact&) = default;
};

/// 3F2(1, 1, m+1; 2, m+2; 1) = ((m+1)/m)·H_m. DomainError for m = 0.
Rational clausen_3f2_closed_form(Nat m);

/// ψ(n) for n >= 1, with the rational part derived from
///   ψ(n) = -1/n - γ + n/(n+1) · 3F2(1, 1, n+1; 2, n+2; 1)
/// and the closed form above. DomainError for n = 0.
DigammaExact digamma_exact(Nat n);

/// γ rounded to `precision` places, error bound one unit in the last
/// place. CapabilityError beyond kMaxGammaPrecision.
NumericValue gamma_constant(unsigned precision);

enum class DigammaMethod {
  // Σ z/((n+1)(n+z+1)) in its 3F2 form, summed with the certified
  // asymptotic tail of pfq_numeric_unit.
  hypergeometric,
  // The plain series with N = ceil(z·10^precision) terms (or a given N).
  direct_series,
};

struct DigammaOptions {
  DigammaMethod method = DigammaMethod::hypergeometric;
  // direct_series only: fixed term count instead of the automatic choice.
  Nat terms = 0;
  Nat max_terms = kDefaultMaxTerms;
};

/// ψ(z) = -1/z - γ + Σ_{n>=0} z/((n+1)(n+z+1)) for rational z > 0.
/// The error bound covers the series tail, rounding, and γ's truncation.
NumericValue digamma_numeric(const Rational& z, unsigned precision, DigammaOptions options = {});

}  // namespace hyperpsi
