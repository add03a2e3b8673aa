#include "hyperpsi/verify.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "hyperpsi/bailey.hpp"
#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/numeric_series.hpp"
#include "hyperpsi/series.hpp"

namespace hyperpsi {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 6> kIdentityNames{{
    {Identity::gauss_collapse, "gauss_collapse"},
    {Identity::bailey_terminating, "bailey_terminating"},
    {Identity::clausen_vs_truncated, "clausen_vs_truncated"},
    {Identity::digamma_recurrence, "digamma_recurrence"},
    {Identity::numeric_crosscheck, "numeric_crosscheck"},
    {Identity::core_invariants, "core_invariants"},
}};

// Uniform in [lo, hi]; modulo bias is irrelevant at these ranges and keeps
// the sequence identical across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng, std::int64_t num_lo, std::int64_t num_hi) {
  const std::int64_t p = draw(rng, num_lo, num_hi);
  const std::int64_t q = draw(rng, 1, 9);
  return Rational::normalize(p, q);
}

struct BaileyCase {
  std::int64_t p;
  std::int64_t b;
  Nat n;
};

const std::vector<BaileyCase>& bailey_grid() {
  static const std::vector<BaileyCase> grid = [] {
    std::vector<BaileyCase> g;
    for (std::int64_t p = 1; p <= 8; ++p) {
      for (std::int64_t b = 1; b <= 6; ++b) {
        for (auto n = static_cast<Nat>(p); n <= 12; ++n) {
          g.push_back({p, b, n});
        }
      }
    }
    return g;
  }();
  return grid;
}

// One trial: its parameter description and, on mismatch, the failure.
struct TrialOutcome {
  std::string input;
  std::optional<VerificationFailure> failure;
};

TrialOutcome check(std::string input, const std::string& expected, const std::string& actual) {
  TrialOutcome out{std::move(input), std::nullopt};
  if (expected != actual) {
    out.failure = VerificationFailure{out.input, expected, actual};
  }
  return out;
}

TrialOutcome run_gauss(std::mt19937_64& rng, bool describe_only) {
  const Rational a = Rational::normalize(draw(rng, 1, 9), draw(rng, 1, 9));
  const Rational b = Rational::normalize(draw(rng, 1, 9), draw(rng, 1, 9));
  const auto n = static_cast<Nat>(draw(rng, 0, 20));
  std::string input = "a=" + a.to_string() + ", b=" + b.to_string() + ", n=" + std::to_string(n);
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  return check(std::move(input), gauss_truncated_closed_form(a, b, n).to_string(),
               truncated_pfq(gauss_collapse_spec(a, b), n).value.to_string());
}

TrialOutcome run_bailey(const BaileyCase& c, bool describe_only) {
  const Rational a(-c.p);
  const Rational b(c.b);
  const Rational f = b + Rational(2);
  std::string input = "a=" + a.to_string() + ", b=" + b.to_string() + ", f=" + f.to_string() +
                      ", n=" + std::to_string(c.n);
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  return check(std::move(input), bailey_rhs_exact(a, b, f, c.n).to_string(),
               terminating_pfq(bailey_lhs_spec(a, b, f, c.n)).value.to_string());
}

TrialOutcome run_clausen(std::mt19937_64& rng, bool describe_only) {
  const auto m = static_cast<Nat>(draw(rng, 1, 200));
  std::string input = "m=" + std::to_string(m);
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  const Rational one(1);
  const Rational mm(static_cast<std::int64_t>(m));
  const Rational via_truncation =
      (mm + one) / mm * truncated_pfq(SeriesSpec{{one, one}, {Rational(2)}, one}, m - 1).value;
  return check(std::move(input), via_truncation.to_string(),
               clausen_3f2_closed_form(m).to_string());
}

TrialOutcome run_digamma(std::mt19937_64& rng, bool describe_only) {
  const auto n = static_cast<Nat>(draw(rng, 1, 500));
  std::string input = "n=" + std::to_string(n);
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  const Rational step =
      digamma_exact(n + 1).rational_part - digamma_exact(n).rational_part;
  const Rational expected_step = Rational::normalize(1, static_cast<std::int64_t>(n));
  if (step != expected_step) {
    return check(input + " (step)", expected_step.to_string(), step.to_string());
  }
  return check(input + " (harmonic)", harmonic(n - 1).to_string(),
               digamma_exact(n).rational_part.to_string());
}

TrialOutcome run_numeric(std::mt19937_64& rng, bool describe_only) {
  const auto m = static_cast<Nat>(draw(rng, 1, 51));
  std::string input = "m=" + std::to_string(m) + ", precision=10";
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  const Rational one(1);
  const Rational mm(static_cast<std::int64_t>(m));
  const SeriesSpec spec{{one, one, mm + one}, {Rational(2), mm + Rational(2)}, one};
  const Rational exact = clausen_3f2_closed_form(m);
  const NumericValue v = pfq_numeric_unit(spec, 10);
  TrialOutcome out{std::move(input), std::nullopt};
  if (!v.contains(exact) || v.error_bound() > Rational::normalize(BigInt(1), pow10(10))) {
    out.failure = VerificationFailure{out.input, exact.to_string() + " within 1e-10",
                                      v.to_string() + " +/- " + v.error_string()};
  }
  return out;
}

TrialOutcome run_core(std::mt19937_64& rng, bool describe_only) {
  const Rational lambda = draw_rational(rng, -9, 9);
  const auto m = static_cast<Nat>(draw(rng, 0, 15));
  const auto n = static_cast<Nat>(draw(rng, 0, 15));
  const auto h = static_cast<Nat>(draw(rng, 1, 300));
  std::string input = "lambda=" + lambda.to_string() + ", m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ", h=" + std::to_string(h);
  if (describe_only) {
    return {std::move(input), std::nullopt};
  }
  const Rational mm(static_cast<std::int64_t>(m));
  const Rational split = pochhammer(lambda, m) * pochhammer(lambda + mm, n);
  if (split != pochhammer(lambda, m + n)) {
    return check(input + " (pochhammer split)", pochhammer(lambda, m + n).to_string(),
                 split.to_string());
  }
  const Rational step =
      harmonic(h - 1) + Rational::normalize(1, static_cast<std::int64_t>(h));
  if (step != harmonic(h)) {
    return check(input + " (harmonic step)", harmonic(h).to_string(), step.to_string());
  }
  if (pochhammer(Rational(1), n) != factorial(n)) {
    return check(input + " (factorial)", factorial(n).to_string(),
                 pochhammer(Rational(1), n).to_string());
  }
  const Rational again = Rational::normalize(split.numerator(), split.denominator());
  return check(input + " (normalize)", split.to_string(), again.to_string());
}

Nat trial_count(Identity identity, Nat trials) {
  if (identity == Identity::bailey_terminating && trials == 0) {
    return bailey_grid().size();
  }
  return trials;
}

TrialOutcome run_trial(Identity identity, Nat trials, std::uint64_t seed, Nat i,
                       bool describe_only) {
  std::mt19937_64 rng(trial_seed(seed, i));
  switch (identity) {
    case Identity::gauss_collapse:
      return run_gauss(rng, describe_only);
    case Identity::bailey_terminating: {
      const auto& grid = bailey_grid();
      const std::size_t index =
          trials == 0 ? i : static_cast<std::size_t>(draw(rng, 0, std::ssize(grid) - 1));
      return run_bailey(grid[index], describe_only);
    }
    case Identity::clausen_vs_truncated:
      return run_clausen(rng, describe_only);
    case Identity::digamma_recurrence:
      return run_digamma(rng, describe_only);
    case Identity::numeric_crosscheck:
      return run_numeric(rng, describe_only);
    case Identity::core_invariants:
      return run_core(rng, describe_only);
  }
  return {};
}

TrialOutcome guarded_trial(Identity identity, Nat trials, std::uint64_t seed, Nat i) {
  try {
    return run_trial(identity, trials, seed, i, false);
  } catch (const std::exception& e) {
    const std::string input = run_trial(identity, trials, seed, i, true).input;
    return {input, VerificationFailure{input, "no error", e.what()}};
  }
}

VerificationReport finish(Identity identity, Nat trials, std::uint64_t seed,
                           std::vector<TrialOutcome>& outcomes,
                           std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.identity_name = std::string(identity_name(identity));
  report.seed = seed;
  report.trials = trials;
  for (TrialOutcome& o : outcomes) {
    if (o.failure) {
      report.failures.push_back(std::move(*o.failure));
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Identity parse_identity(std::string_view name) {
  for (const auto& [id, label] : kIdentityNames) {
    if (label == name) {
      return id;
    }
  }
  throw UsageError("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(Identity identity) {
  for (const auto& [id, label] : kIdentityNames) {
    if (id == identity) {
      return label;
    }
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t master, Nat trial) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string describe_trial(Identity identity, std::uint64_t seed, Nat trial, Nat trials) {
  return run_trial(identity, trials, seed, trial, true).input;
}

VerificationReport verify(Identity identity, Nat trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Nat count = trial_count(identity, trials);
  std::vector<TrialOutcome> outcomes(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = guarded_trial(identity, trials, seed, static_cast<Nat>(i));
  }
  return finish(identity, count, seed, outcomes, start);
}

VerificationReport verify_serial(Identity identity, Nat trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Nat count = trial_count(identity, trials);
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(count);
  for (Nat i = 0; i < count; ++i) {
    outcomes.push_back(guarded_trial(identity, trials, seed, i));
  }
  return finish(identity, count, seed, outcomes, start);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "identity: " << identity_name << "\n"
      << "seed: " << seed << "\n"
      << "trials: " << trials << "\n"
      << "failures: " << failures.size() << "\n";
  for (const VerificationFailure& f : failures) {
    out << "  input: " << f.input << "\n"
        << "    expected: " << f.expected << "\n"
        << "    actual:   " << f.actual << "\n";
  }
  out << "elapsed_ms: " << static_cast<long long>(elapsed_ms) << "\n"
      << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["identity"] = identity_name;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const VerificationFailure& f : failures) {
    doc["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  doc["elapsed_ms"] = static_cast<long long>(elapsed_ms);
  doc["status"] = passed() ? "PASS" : "FAIL";
  return doc.dump(2) + "\n";
}

}  // namespace hyperpsi
