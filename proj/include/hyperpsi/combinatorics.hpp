#pragma once

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

/// Rising factorial λ(λ+1)⋯(λ+n−1). Returns 1 for n = 0, including λ = 0.
/// A negative-integer λ with n > −λ yields an exact zero.
Rational pochhammer(const Rational& lambda, Nat n);

/// H_m = 1 + 1/2 + ... + 1/m, accumulated one term at a time; H_0 = 0.
Rational harmonic(Nat m);

/// Same value as harmonic(), combined by binary splitting over [1, m].
Rational harmonic_split(Nat m);

Rational factorial(Nat n);

}  // namespace hyperpsi
