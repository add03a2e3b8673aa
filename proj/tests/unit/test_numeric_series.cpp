#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/numeric_series.hpp"

using hyperpsi::Rational;
using hyperpsi::SeriesSpec;

namespace {

Rational tolerance(unsigned digits) {
  return Rational::normalize(hyperpsi::BigInt(1), hyperpsi::pow10(digits));
}

}  // namespace

TEST(PfqNumeric, ClausenExamples) {
  const auto two = hyperpsi::pfq_numeric_unit(SeriesSpec::parse("3F2(1,1,2;2,3;1)"), 15);
  EXPECT_TRUE(two.contains(Rational(2)));
  EXPECT_TRUE(two.within(Rational(2), tolerance(15)));

  const auto row = hyperpsi::pfq_numeric_unit(SeriesSpec::parse("3F2(1,1,13;2,14;1)"), 15);
  EXPECT_TRUE(row.contains(Rational::normalize(1118273, 332640)));
  EXPECT_EQ(row.to_string(), "3.361811568061568");
}

TEST(PfqNumeric, GaussSumAtTwelveDigits) {
  const auto r = hyperpsi::pfq_numeric_unit_detailed(SeriesSpec::parse("2F1(1,1;3;1)"), 12);
  EXPECT_TRUE(r.value.within(Rational(2), tolerance(12)));
  EXPECT_TRUE(r.value.contains(Rational(2)));
  EXPECT_EQ(r.method, hyperpsi::TailMethod::asymptotic);
  // Plain partial sums trail far behind: after 10^6 terms the gap is still ~2e-6.
  EXPECT_LT(r.terms_summed, 1000U);
}

TEST(PfqNumeric, ReferenceValues) {
  struct Case {
    const char* spec;
    const char* value;
  };
  const Case cases[] = {
      {"3F2(1/2,1/2,1;3/2,3/2;1)", "1.23370055013616982735431137498451889191421242590509882830167"},
      {"2F1(1/2,1/3;5/2;1)", "1.10876123966991022926579215362766213042479650636017210415225"},
      {"1F1(1;3/2;1)", "2.03007846927870497553908992566595044893256458931847252473020"},
  };
  for (const auto& c : cases) {
    const auto v = hyperpsi::pfq_numeric_unit(SeriesSpec::parse(c.spec), 30);
    const Rational ref(oracle::decimal(c.value));
    EXPECT_TRUE(v.contains(ref)) << c.spec << " " << v.to_string();
    EXPECT_TRUE(v.within(ref, tolerance(30))) << c.spec;
  }
}

TEST(PfqNumeric, ErrorBoundIsHonestOnClausenRows) {
  for (hyperpsi::Nat m = 1; m <= 51; m += 5) {
    const auto spec = hyperpsi::make_series({Rational(1), Rational(1), Rational(m + 1)},
                                            {Rational(2), Rational(m + 2)});
    const auto v = hyperpsi::pfq_numeric_unit(spec, 12);
    const Rational exact = hyperpsi::clausen_3f2_closed_form(m);
    EXPECT_TRUE(v.contains(exact)) << m;
    EXPECT_TRUE(v.within(exact, tolerance(12))) << m;
  }
}

TEST(PfqNumeric, TerminatingSeriesIsExact) {
  const auto r = hyperpsi::pfq_numeric_unit_detailed(SeriesSpec::parse("2F1(-4,1/2;3;1)"), 20);
  EXPECT_EQ(r.method, hyperpsi::TailMethod::exact);
  const auto exact = hyperpsi::truncated_pfq(SeriesSpec::parse("2F1(-4,1/2;3;1)"), 4).value;
  EXPECT_TRUE(r.value.contains(exact));
}

TEST(PfqNumeric, Divergence) {
  EXPECT_THROW(hyperpsi::pfq_numeric_unit(SeriesSpec::parse("2F1(1,1;2;1)"), 10),
               hyperpsi::DivergenceError);
  EXPECT_THROW(hyperpsi::pfq_numeric_unit(SeriesSpec::parse("3F2(1,2,3;2,3;1)"), 10),
               hyperpsi::DivergenceError);
  EXPECT_THROW(hyperpsi::pfq_numeric_unit(SeriesSpec::parse("2F1(1,1;3;1/2)"), 10),
               hyperpsi::DomainError);
}

TEST(PfqNumeric, ConvergenceErrorCarriesPartial) {
  try {
    hyperpsi::pfq_numeric_unit(SeriesSpec::parse("3F2(1,1,51;2,52;1)"), 40, 60);
    FAIL() << "expected ConvergenceError";
  } catch (const hyperpsi::ConvergenceError& e) {
    ASSERT_TRUE(e.partial().has_value());
    EXPECT_EQ(e.terms(), 60U);
    EXPECT_GT(e.partial()->error_bound(), tolerance(40));
    EXPECT_TRUE(e.partial()->contains(hyperpsi::clausen_3f2_closed_form(50)));
  }
}
