#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

/// Parameters of pFq((a_p); (b_q); z). Lower parameters must avoid 0, -1, -2, ...
struct SeriesSpec {
  std::vector<Rational> numerator_params;
  std::vector<Rational> denominator_params;
  Rational argument{1};

  /// Parses "pFq(a1,...,ap;b1,...,bq;z)"; the p and q digits must match
  /// the list lengths. Validates the lower parameters.
  static SeriesSpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws DomainError naming the first lower parameter that is a
  /// nonpositive integer.
  void validate() const;

  /// Smallest p such that some upper parameter equals -p, if any: the
  /// series is then a polynomial of degree p.
  std::optional<Nat> terminating_order() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

SeriesSpec make_series(std::vector<Rational> upper, std::vector<Rational> lower,
                       Rational argument = Rational(1));

struct TruncatedSum {
  Rational value;
  Nat terms_used = 0;
};

/// Σ_{k=0}^{n} [(a_p)]_k / [(b_q)]_k · z^k / k!, exactly, via the term ratio
/// t_{k+1}/t_k = Π(a_i+k)·z / (Π(b_j+k)·(k+1)).
///
/// Throws DomainError when a lower parameter b_j + k vanishes for some k < n
/// while the running term is still nonzero; the message names j and k.
TruncatedSum truncated_pfq(const SeriesSpec& spec, Nat n);

/// Full sum of a terminating series (throws DomainError when the series
/// does not terminate).
TruncatedSum terminating_pfq(const SeriesSpec& spec);

}  // namespace hyperpsi
