#pragma once

#include "hyperpsi/numeric_value.hpp"
#include "hyperpsi/rational.hpp"

namespace hyperpsi {

/// Γ(x) for rational x away from the poles 0, -1, -2, ... (DomainError).
///
/// The argument is moved into [1, 2) with an exact Pochhammer factor and
/// Γ is evaluated there with MPFR at a working precision chosen so the
/// absolute error stays within a few units of 10^-(precision + guard).
NumericValue gamma_numeric(const Rational& x, unsigned precision);

}  // namespace hyperpsi
