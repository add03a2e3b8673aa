#include "hyperpsi/digamma.hpp"

#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/series.hpp"

namespace hyperpsi {

namespace {

constexpr std::string_view kGammaSymbol = "-γ";

// γ rounded to `scale` places.
NumericValue gamma_at_scale(unsigned scale, unsigned precision) {
  if (scale + 1 > kEulerGammaDigits.size()) {
    throw CapabilityError("γ is stored to " + std::to_string(kEulerGammaDigits.size()) +
                          " places; " + std::to_string(scale) + " requested");
  }
  BigInt mantissa(std::string(kEulerGammaDigits.substr(0, scale)), 10);
  if (kEulerGammaDigits[scale] >= '5') {
    mantissa += 1;
  }
  return NumericValue(mantissa, BigInt(1), scale, precision);
}

NumericValue digamma_direct(const Rational& z, unsigned precision, const DigammaOptions& options) {
  Nat n_terms = options.terms;
  if (n_terms == 0) {
    const Rational wanted = z * Rational(pow10(precision));
    const BigInt n = wanted.ceil();
    if (n > BigInt(static_cast<unsigned long>(options.max_terms))) {
      throw ConvergenceError("direct digamma series needs " + n.get_str() + " terms (max " +
                                 std::to_string(options.max_terms) + ")",
                             std::nullopt, 0);
    }
    n_terms = std::max<Nat>(1, n.get_ui());
  }
  // Each term rounds by at most half an ulp; the extra digits absorb n_terms of them.
  const unsigned scale =
      precision + kGuardDigits + static_cast<unsigned>(decimal_digits(BigInt(
                                     static_cast<unsigned long>(n_terms))));
  const BigInt zn = z.numerator();
  const BigInt zd = z.denominator();
  const BigInt top = zn * pow10(scale);
  BigInt sum = 0;
  for (Nat n = 0; n < n_terms; ++n) {
    const BigInt n1(static_cast<unsigned long>(n + 1));
    const BigInt den = n1 * (n1 * zd + zn);
    sum += round_scaled(Rational::normalize(top, den), 0);
  }
  // Σ_{n>=N} z/((n+1)(n+z+1)): telescopes to z/(N+1) when z >= 1; z/N otherwise.
  const Rational n_rat(static_cast<std::int64_t>(n_terms));
  const Rational tail = z >= Rational(1) ? z / (n_rat + Rational(1)) : z / n_rat;
  const BigInt err = BigInt(static_cast<unsigned long>(n_terms)) +
                     (tail * Rational(pow10(scale))).ceil();
  const NumericValue series(sum, err, scale, precision);
  return series - NumericValue::from_rational(z.reciprocal(), precision, scale - precision) -
         gamma_at_scale(scale, precision);
}

}  // namespace

std::string DigammaExact::to_string() const {
  std::string out(kGammaSymbol);
  if (rational_part.is_zero()) {
    return out;
  }
  out += rational_part.is_negative() ? " - " : " + ";
  out += rational_part.abs().to_string();
  return out;
}

DigammaExact DigammaExact::parse(std::string_view text) {
  const std::string whole(text);
  if (text.substr(0, kGammaSymbol.size()) != kGammaSymbol) {
    throw ParseError("expected digamma value starting with -γ, got '" + whole + "'");
  }
  text.remove_prefix(kGammaSymbol.size());
  DigammaExact out;
  if (text.empty()) {
    return out;
  }
  if (text.size() < 4 || text[0] != ' ' || (text[1] != '+' && text[1] != '-') || text[2] != ' ') {
    throw ParseError("malformed digamma value '" + whole + "'");
  }
  const bool negative = text[1] == '-';
  const Rational part = Rational::parse(text.substr(3));
  if (part.sign() <= 0) {
    throw ParseError("malformed digamma value '" + whole + "'");
  }
  out.rational_part = negative ? -part : part;
  return out;
}

Rational clausen_3f2_closed_form(Nat m) {
  if (m == 0) {
    throw DomainError("closed form needs m >= 1");
  }
  const Rational mm(static_cast<std::int64_t>(m));
  return (mm + Rational(1)) / mm * harmonic(m);
}

DigammaExact digamma_exact(Nat n) {
  if (n == 0) {
    throw DomainError("digamma has a pole at 0");
  }
  const Rational nn(static_cast<std::int64_t>(n));
  const Rational one(1);
  return DigammaExact{-1, -nn.reciprocal() + nn / (nn + one) * clausen_3f2_closed_form(n)};
}

NumericValue gamma_constant(unsigned precision) {
  if (precision > kMaxGammaPrecision) {
    throw CapabilityError("γ is available to " + std::to_string(kMaxGammaPrecision) +
                          " places; " + std::to_string(precision) + " requested");
  }
  return gamma_at_scale(precision, precision);
}

NumericValue digamma_numeric(const Rational& z, unsigned precision, DigammaOptions options) {
  if (z.sign() <= 0) {
    throw DomainError("digamma_numeric needs z > 0, got " + z.to_string());
  }
  if (precision > kMaxGammaPrecision) {
    throw CapabilityError("γ is available to " + std::to_string(kMaxGammaPrecision) +
                          " places; " + std::to_string(precision) + " requested");
  }
  if (options.method == DigammaMethod::direct_series) {
    return digamma_direct(z, precision, options);
  }
  const Rational one(1);
  const SeriesSpec spec{{one, one, one + z}, {Rational(2), Rational(2) + z}, one};
  const NumericValue f32 = pfq_numeric_unit(spec, precision + 1, options.max_terms);
  const NumericValue series = f32.scaled_by(z / (one + z));
  const unsigned scale = series.scale();
  const NumericValue inv = NumericValue::from_rational(z.reciprocal(), precision + 1,
                                                       scale - precision - 1);
  return (series - inv - gamma_at_scale(scale, precision)).with_precision(precision);
}

}  // namespace hyperpsi
