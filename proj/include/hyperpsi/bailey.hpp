#pragma once

#include <optional>

#include "hyperpsi/numeric_value.hpp"
#include "hyperpsi/rational.hpp"
#include "hyperpsi/series.hpp"

namespace hyperpsi {

/// 2F1(a, b; a+b+1; 1), the series whose truncations have a closed form.
SeriesSpec gauss_collapse_spec(const Rational& a, const Rational& b);

/// Closed form of the truncated 2F1(a, b; a+b+1; 1)_n:
///   (a+1)_n (b+1)_n / ((a+b+1)_n n!).
/// Throws DomainError when a+b+1 is a nonpositive integer.
Rational gauss_truncated_closed_form(const Rational& a, const Rational& b, Nat n);

/// 3F2(a, b, f+n; f, a+b+n+1; 1), the series on the left of the truncation
/// identity
///   3F2(a,b,f+n; f,a+b+n+1; 1)
///     = Γ(n+1)Γ(a+b+n+1) / (Γ(a+n+1)Γ(b+n+1)) · Σ_{k=0}^{n} (a)_k(b)_k/((f)_k k!).
SeriesSpec bailey_lhs_spec(const Rational& a, const Rational& b, const Rational& f, Nat n);

/// The gamma quotient Γ(n+1)Γ(a+b+n+1) / (Γ(a+n+1)Γ(b+n+1)) as an exact
/// Pochhammer ratio. Available whenever a or b is an integer; nullopt
/// otherwise. Throws DomainError at gamma poles.
std::optional<Rational> bailey_prefactor_exact(const Rational& a, const Rational& b, Nat n);

/// Exact right-hand side of the identity (prefactor times the truncated
/// 2F1(a,b;f;1)_n). Requires an integer a or b.
Rational bailey_rhs_exact(const Rational& a, const Rational& b, const Rational& f, Nat n);

struct BaileyOptions {
  // Reject f < a + b, the condition under which the identity is stated.
  bool enforce_condition = true;
};

/// Numeric value of the right-hand side above. The prefactor is exact when
/// a or b is an integer and is bracketed from gamma_numeric otherwise.
/// Throws PreconditionError when f < a + b (unless disabled) and
/// DomainError at gamma poles.
NumericValue bailey_3f2_value(const Rational& a, const Rational& b, const Rational& f, Nat n,
                              unsigned precision, BaileyOptions options = {});

}  // namespace hyperpsi
