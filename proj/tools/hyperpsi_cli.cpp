// hyperpsi: exact Clausen 3F2 and digamma tables, identity verification and
// free-form hypergeometric evaluation at unit argument.
//
// Exit codes: 0 success, 1 verification or convergence failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/numeric_series.hpp"
#include "hyperpsi/series.hpp"
#include "hyperpsi/tables.hpp"
#include "hyperpsi/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;

  void write(const std::string& document) const {
    if (path.empty()) {
      std::cout << document;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw hyperpsi::UsageError("cannot open output file '" + path + "'");
    }
    file << document;
  }
};

std::string method_name(hyperpsi::TailMethod m) {
  switch (m) {
    case hyperpsi::TailMethod::exact:
      return "exact";
    case hyperpsi::TailMethod::geometric:
      return "geometric";
    case hyperpsi::TailMethod::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncated hypergeometric sums, Clausen 3F2 values and digamma tables"};
  app.require_subcommand(1);

  Output out;
  std::string format = "markdown";
  std::optional<unsigned> precision;

  auto* clausen = app.add_subcommand("clausen", "Table of 3F2(1,1,m+1;2,m+2;1) for m_min..m_max");
  hyperpsi::Nat m_min = 1;
  hyperpsi::Nat m_max = 1;
  clausen->add_option("m_min", m_min, "First m (>= 1)")->required();
  clausen->add_option("m_max", m_max, "Last m")->required();
  clausen->add_option("--format", format, "markdown | csv | json");
  clausen->add_option("--precision", precision, "Add a decimal column with this many places");
  clausen->add_option("--out", out.path, "Write to FILE instead of stdout");

  auto* digamma = app.add_subcommand("digamma", "Table of psi(z) = -γ + H_{z-1} for z = 1..z_max");
  hyperpsi::Nat z_max = 1;
  digamma->add_option("z_max", z_max, "Last z (>= 1)")->required();
  digamma->add_option("--format", format, "markdown | csv | json");
  digamma->add_option("--precision", precision, "Add a decimal column using γ to this many places");
  digamma->add_option("--out", out.path, "Write to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a seeded identity suite");
  std::string identity;
  hyperpsi::Nat trials = 200;
  std::uint64_t seed = 42;
  std::string report_format = "text";
  verify->add_option("identity", identity,
                     "gauss_collapse | bailey_terminating | clausen_vs_truncated | "
                     "digamma_recurrence | numeric_crosscheck | core_invariants")
      ->required();
  verify->add_option("--trials", trials, "Number of trials (0 = full grid for bailey_terminating)");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--format", report_format, "text | json");
  verify->add_option("--out", out.path, "Write to FILE instead of stdout");

  auto* eval = app.add_subcommand("eval", "Evaluate pFq(a...;b...;z): exact partial sum or certified numeric value at z = 1");
  std::string spec_text;
  std::optional<hyperpsi::Nat> terms;
  hyperpsi::Nat max_terms = hyperpsi::kDefaultMaxTerms;
  eval->add_option("spec", spec_text, "Series, e.g. \"3F2(1,1,13;2,14;1)\"")->required();
  eval->add_option("--terms", terms, "Exact sum of terms k = 0..N");
  eval->add_option("--precision", precision, "Decimal places for the numeric value (default 15)");
  eval->add_option("--max-terms", max_terms, "Term cap for numeric summation");
  eval->add_option("--out", out.path, "Write to FILE instead of stdout");

  auto* psi = app.add_subcommand("psi", "Certified decimal value of psi(z) for rational z > 0");
  std::string z_text;
  psi->add_option("z", z_text, "Rational argument, e.g. 1/2")->required();
  psi->add_option("--precision", precision, "Decimal places (default 15)");
  psi->add_option("--max-terms", max_terms, "Term cap for the series");
  psi->add_option("--out", out.path, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (clausen->parsed()) {
      out.write(hyperpsi::emit_clausen_table(m_min, m_max, hyperpsi::parse_table_format(format),
                                             precision));
    } else if (digamma->parsed()) {
      out.write(
          hyperpsi::emit_digamma_table(z_max, hyperpsi::parse_table_format(format), precision));
    } else if (verify->parsed()) {
      if (report_format != "text" && report_format != "json") {
        throw hyperpsi::UsageError("unknown report format '" + report_format + "'");
      }
      const auto report = hyperpsi::verify(hyperpsi::parse_identity(identity), trials, seed);
      out.write(report_format == "json" ? report.to_json() : report.to_text());
      return report.passed() ? 0 : kExitFailure;
    } else if (eval->parsed()) {
      const auto spec = hyperpsi::SeriesSpec::parse(spec_text);
      std::string doc = "series: " + spec.to_string() + "\n";
      if (terms) {
        const auto sum = hyperpsi::truncated_pfq(spec, *terms);
        doc += "terms_used: " + std::to_string(sum.terms_used) + "\n";
        doc += "value: " + sum.value.to_string() + "\n";
      } else {
        const auto r = hyperpsi::pfq_numeric_unit_detailed(spec, precision.value_or(15), max_terms);
        doc += "value: " + r.value.to_string() + "\n";
        doc += "error_bound: " + r.value.error_string() + "\n";
        doc += "terms_summed: " + std::to_string(r.terms_summed) + "\n";
        doc += "tail: " + method_name(r.method);
        if (r.method == hyperpsi::TailMethod::asymptotic) {
          doc += " (order " + std::to_string(r.tail_order) + ")";
        }
        doc += "\n";
      }
      out.write(doc);
    } else if (psi->parsed()) {
      const auto z = hyperpsi::Rational::parse(z_text);
      hyperpsi::DigammaOptions options;
      options.max_terms = max_terms;
      const auto v = hyperpsi::digamma_numeric(z, precision.value_or(15), options);
      out.write("psi(" + z.to_string() + ") = " + v.to_string() + "\nerror_bound: " +
                v.error_string() + "\n");
    }
  } catch (const hyperpsi::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.partial()) {
      std::cerr << "partial: " << e.partial()->to_string() << " +/- "
                << e.partial()->error_string() << "\n";
    }
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
