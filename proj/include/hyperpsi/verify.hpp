#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

enum class Identity {
  gauss_collapse,        // truncated 2F1(a,b;a+b+1;1)_n vs its closed form
  bailey_terminating,    // both sides of the truncation identity with a = -p
  clausen_vs_truncated,  // closed-form 3F2 vs ((m+1)/m)·2F1(1,1;2;1)_{m-1}
  digamma_recurrence,    // ψ(n+1) - ψ(n) = 1/n and the two rational-part routes
  numeric_crosscheck,    // certified numeric 3F2 vs the exact closed form
  core_invariants,       // Pochhammer split, harmonic step, (1)_n = n!, reduction
};

/// UsageError for unknown names.
Identity parse_identity(std::string_view name);
std::string_view identity_name(Identity identity);

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  std::string identity_name;
  std::uint64_t seed = 0;
  Nat trials = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

/// Seed for trial i, derived from the master seed (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t master, Nat trial);

/// Human-readable parameter tuple of trial i of a run with `trials` trials;
/// a pure function of its inputs.
std::string describe_trial(Identity identity, std::uint64_t seed, Nat trial, Nat trials = 1);

/// Runs `trials` seeded trials (in parallel). bailey_terminating with
/// trials = 0 runs its full 408-case grid (p in [1,8], b in [1,6],
/// n in [p,12], f = b+2); otherwise each trial samples the grid.
VerificationReport verify(Identity identity, Nat trials, std::uint64_t seed);
VerificationReport verify_serial(Identity identity, Nat trials, std::uint64_t seed);

}  // namespace hyperpsi
