#include <gtest/gtest.h>

#include <random>

#include "../oracle.hpp"
#include "hyperpsi/combinatorics.hpp"

using hyperpsi::Rational;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(hyperpsi::pochhammer(Rational(1), 4), Rational(24));
  EXPECT_EQ(hyperpsi::pochhammer(Rational(0), 0), Rational(1));
  EXPECT_EQ(hyperpsi::pochhammer(Rational::normalize(1, 2), 3), Rational::normalize(15, 8));
}

TEST(Pochhammer, NegativeIntegerVanishes) {
  EXPECT_EQ(hyperpsi::pochhammer(Rational(-3), 3), Rational(-6));
  EXPECT_EQ(hyperpsi::pochhammer(Rational(-3), 4), Rational(0));
  EXPECT_EQ(hyperpsi::pochhammer(Rational(0), 1), Rational(0));
}

TEST(Pochhammer, MatchesOracleAndSplits) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = static_cast<std::int64_t>(rng() % 41) - 20;
    const auto q = static_cast<std::int64_t>(rng() % 9) + 1;
    const auto m = static_cast<hyperpsi::Nat>(rng() % 15);
    const auto n = static_cast<hyperpsi::Nat>(rng() % 15);
    const Rational x = Rational::normalize(p, q);
    const Rational whole = hyperpsi::pochhammer(x, m + n);
    EXPECT_EQ(whole.to_string(),
              oracle::str(oracle::rising(mpq_class(p, q), static_cast<unsigned>(m + n))));
    EXPECT_EQ(whole, hyperpsi::pochhammer(x, m) * hyperpsi::pochhammer(x + Rational(m), n));
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(hyperpsi::harmonic(0), Rational(0));
  EXPECT_EQ(hyperpsi::harmonic(4), Rational::normalize(25, 12));
  EXPECT_EQ(hyperpsi::harmonic(9), Rational::normalize(7129, 2520));
}

TEST(Harmonic, StepAndSplitAgree) {
  Rational previous(0);
  for (hyperpsi::Nat m = 1; m <= 300; ++m) {
    const Rational h = hyperpsi::harmonic(m);
    EXPECT_EQ(h - previous, Rational::normalize(1, static_cast<std::int64_t>(m)));
    EXPECT_EQ(h, hyperpsi::harmonic_split(m));
    previous = h;
  }
  EXPECT_EQ(hyperpsi::harmonic(1000).to_string(), oracle::str(oracle::harmonic(1000)));
  EXPECT_EQ(hyperpsi::harmonic(10000), hyperpsi::harmonic_split(10000));
}

TEST(Factorial, ExamplesAndPochhammer) {
  EXPECT_EQ(hyperpsi::factorial(0), Rational(1));
  EXPECT_EQ(hyperpsi::factorial(5), Rational(120));
  EXPECT_EQ(hyperpsi::factorial(10), Rational(3628800));
  for (hyperpsi::Nat n = 0; n <= 60; ++n) {
    EXPECT_EQ(hyperpsi::factorial(n), hyperpsi::pochhammer(Rational(1), n));
  }
}
