#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/numeric_series.hpp"

using hyperpsi::DigammaExact;
using hyperpsi::Rational;

namespace {

Rational tolerance(unsigned digits) {
  return Rational::normalize(hyperpsi::BigInt(1), hyperpsi::pow10(digits));
}

Rational gamma_ref() {
  return Rational(oracle::decimal(
      "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144725"));
}

}  // namespace

TEST(Clausen, ClosedForm) {
  EXPECT_EQ(hyperpsi::clausen_3f2_closed_form(1), Rational(2));
  EXPECT_EQ(hyperpsi::clausen_3f2_closed_form(2), Rational::normalize(9, 4));
  EXPECT_EQ(hyperpsi::clausen_3f2_closed_form(50).to_string(),
            "13943237577224054960759/3038278925731369320000");
  EXPECT_THROW(hyperpsi::clausen_3f2_closed_form(0), hyperpsi::DomainError);
}

TEST(Clausen, MatchesLongPartialSumsFromBelow) {
  // Terms are positive, so partial sums increase towards the closed form.
  for (unsigned m : {1U, 3U, 7U}) {
    const mpq_class partial = oracle::pfq_sum({1, 1, m + 1}, {2, m + 2}, 1, 200);
    const Rational exact = hyperpsi::clausen_3f2_closed_form(m);
    EXPECT_LT(Rational(partial), exact);
    EXPECT_LT(exact - Rational(partial), Rational::normalize(1, 20)) << m;
  }
}

TEST(DigammaExact, Examples) {
  EXPECT_EQ(hyperpsi::digamma_exact(1).to_string(), "-γ");
  EXPECT_EQ(hyperpsi::digamma_exact(10).to_string(), "-γ + 7129/2520");
  EXPECT_EQ(hyperpsi::digamma_exact(52).to_string(),
            "-γ + 14004003155738682347159/3099044504245996706400");
  EXPECT_THROW(hyperpsi::digamma_exact(0), hyperpsi::DomainError);
}

TEST(DigammaExact, RecurrenceAndHarmonic) {
  for (hyperpsi::Nat n = 1; n <= 500; ++n) {
    const DigammaExact a = hyperpsi::digamma_exact(n);
    const DigammaExact b = hyperpsi::digamma_exact(n + 1);
    EXPECT_EQ(a.gamma_coefficient, -1);
    EXPECT_EQ(b.rational_part - a.rational_part, Rational::normalize(1, static_cast<std::int64_t>(n)));
    EXPECT_EQ(a.rational_part, hyperpsi::harmonic(n - 1));
  }
}

TEST(DigammaExact, ParseRoundTrip) {
  for (hyperpsi::Nat n : {1U, 2U, 10U, 52U}) {
    const DigammaExact v = hyperpsi::digamma_exact(n);
    EXPECT_EQ(DigammaExact::parse(v.to_string()), v);
  }
  const DigammaExact negative{-1, Rational::normalize(-3, 7)};
  EXPECT_EQ(negative.to_string(), "-γ - 3/7");
  EXPECT_EQ(DigammaExact::parse("-γ - 3/7"), negative);
  EXPECT_THROW(DigammaExact::parse("γ + 1"), hyperpsi::ParseError);
  EXPECT_THROW(DigammaExact::parse("-γ +"), hyperpsi::ParseError);
}

TEST(GammaConstant, KnownDigits) {
  EXPECT_EQ(hyperpsi::gamma_constant(10).to_string(), "0.5772156649");
  EXPECT_EQ(hyperpsi::gamma_constant(39).to_string(), "0.577215664901532860606512090082402431042");
  const auto g100 = hyperpsi::gamma_constant(100);
  EXPECT_TRUE(g100.within(gamma_ref(), tolerance(100)));
  EXPECT_EQ(hyperpsi::kEulerGammaDigits.substr(0, 39), "577215664901532860606512090082402431042");
  EXPECT_NO_THROW(hyperpsi::gamma_constant(hyperpsi::kMaxGammaPrecision));
  EXPECT_THROW(hyperpsi::gamma_constant(hyperpsi::kMaxGammaPrecision + 1), hyperpsi::CapabilityError);
}

TEST(DigammaNumeric, IntegerArguments) {
  const auto psi1 = hyperpsi::digamma_numeric(Rational(1), 15);
  EXPECT_EQ(psi1.to_string(), "-0.577215664901533");
  EXPECT_TRUE(psi1.within(-gamma_ref(), tolerance(15)));
  const auto psi2 = hyperpsi::digamma_numeric(Rational(2), 18);
  EXPECT_EQ(psi2.to_string(), "0.422784335098467139");
  for (hyperpsi::Nat n = 1; n <= 20; ++n) {
    const Rational exact = hyperpsi::digamma_exact(n).rational_part - gamma_ref();
    const auto v = hyperpsi::digamma_numeric(Rational(static_cast<std::int64_t>(n)), 10);
    EXPECT_TRUE(v.contains(exact)) << n;
    EXPECT_TRUE(v.within(exact, tolerance(10))) << n;
  }
}

TEST(DigammaNumeric, RationalArguments) {
  struct Case {
    Rational z;
    const char* value;
  };
  const Case cases[] = {
      {Rational::normalize(1, 2), "-1.96351002602142347944097633299875556719315960466043410704713"},
      {Rational::normalize(1, 10), "-10.4237549404110767951682162190100254042916425624441889203264"},
      {Rational::normalize(7, 3), "0.617966219979193677003580925712731145844571703279581935807249"},
      {Rational(100), "4.60016185273808740019860558557585072686681279076852805437077"},
  };
  for (const auto& c : cases) {
    const auto v = hyperpsi::digamma_numeric(c.z, 30);
    const Rational ref(oracle::decimal(c.value));
    EXPECT_TRUE(v.contains(ref)) << c.z << " " << v.to_string();
    EXPECT_TRUE(v.within(ref, tolerance(30))) << c.z;
  }
}

TEST(DigammaNumeric, DirectSeriesBoundIsSound) {
  hyperpsi::DigammaOptions direct;
  direct.method = hyperpsi::DigammaMethod::direct_series;
  const Rational half_ref(
      oracle::decimal("-1.96351002602142347944097633299875556719315960466043410704713"));
  for (const hyperpsi::Nat terms : {10U, 100U, 1000U}) {
    direct.terms = terms;
    const auto v = hyperpsi::digamma_numeric(Rational::normalize(1, 2), 12, direct);
    EXPECT_TRUE(v.contains(half_ref)) << terms;
  }
  direct.terms = 0;
  const auto v = hyperpsi::digamma_numeric(Rational::normalize(5, 2), 4, direct);
  EXPECT_TRUE(v.within(Rational(oracle::decimal("0.70315664064524318722569033366791109947")),
                       tolerance(4)));
}

TEST(DigammaNumeric, AgreesWithExactWithinBothBounds) {
  for (hyperpsi::Nat n : {3U, 17U, 52U}) {
    const auto numeric = hyperpsi::digamma_numeric(Rational(static_cast<std::int64_t>(n)), 25);
    const auto gamma = hyperpsi::gamma_constant(25);
    const Rational exact_value = hyperpsi::digamma_exact(n).rational_part - gamma.approximation();
    EXPECT_TRUE(numeric.within(exact_value, numeric.error_bound() + gamma.error_bound())) << n;
  }
}

TEST(DigammaNumeric, Domain) {
  EXPECT_THROW(hyperpsi::digamma_numeric(Rational(0), 10), hyperpsi::DomainError);
  EXPECT_THROW(hyperpsi::digamma_numeric(Rational::normalize(-1, 2), 10), hyperpsi::DomainError);
}
