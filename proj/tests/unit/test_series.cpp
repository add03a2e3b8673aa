#include <gtest/gtest.h>

#include <random>

#include "../oracle.hpp"
#include "hyperpsi/bailey.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/series.hpp"

using hyperpsi::Rational;
using hyperpsi::SeriesSpec;

namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational::normalize(p, q); }

std::vector<mpq_class> raw(const std::vector<Rational>& v) {
  std::vector<mpq_class> out;
  for (const auto& x : v) {
    out.push_back(x.raw());
  }
  return out;
}

}  // namespace

TEST(TruncatedPfq, Examples) {
  const auto s = hyperpsi::truncated_pfq(hyperpsi::make_series({r(1), r(1)}, {r(2)}), 3);
  EXPECT_EQ(s.value, r(25, 12));
  EXPECT_EQ(s.terms_used, 4U);
  EXPECT_EQ(hyperpsi::truncated_pfq(hyperpsi::make_series({r(1, 3), r(7)}, {r(5, 2)}), 0).value,
            r(1));
  EXPECT_EQ(hyperpsi::truncated_pfq(hyperpsi::make_series({r(1), r(1)}, {r(3)}), 3).value, r(8, 5));
}

TEST(TruncatedPfq, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  auto draw = [&] {
    return r(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 6) + 1);
  };
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rational> a(rng() % 4), b(rng() % 3);
    for (auto& x : a) x = draw();
    for (auto& x : b) {
      do x = draw(); while (x.is_nonpositive_integer() || (x.is_integer() && x < r(12)));
    }
    const Rational z = r(static_cast<std::int64_t>(rng() % 7) - 3, 2);
    const auto n = static_cast<unsigned>(rng() % 12);
    const auto spec = hyperpsi::make_series(a, b, z);
    EXPECT_EQ(hyperpsi::truncated_pfq(spec, n).value.to_string(),
              oracle::str(oracle::pfq_sum(raw(a), raw(b), z.raw(), n)))
        << spec.to_string() << " n=" << n;
  }
}

TEST(TruncatedPfq, LowerParameterHitsZero) {
  const auto spec = hyperpsi::make_series({r(1)}, {r(1, 2)});
  EXPECT_THROW(hyperpsi::make_series({r(1)}, {r(-2)}).validate(), hyperpsi::DomainError);
  SeriesSpec bad = spec;
  bad.denominator_params = {r(-2)};
  try {
    hyperpsi::truncated_pfq(bad, 5);
    FAIL() << "expected DomainError";
  } catch (const hyperpsi::DomainError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("b1"), std::string::npos) << what;
    EXPECT_NE(what.find("k = 2"), std::string::npos) << what;
  }
}

TEST(TruncatedPfq, TerminatingUpperParameterStopsSeries) {
  // 2F1(-3, b; c; 1) is Chu-Vandermonde: (c-b)_3/(c)_3.
  const auto spec = hyperpsi::make_series({r(-3), r(2, 3)}, {r(5, 4)});
  EXPECT_EQ(spec.terminating_order(), std::optional<hyperpsi::Nat>(3));
  const Rational expected = (r(5, 4) - r(2, 3)) * (r(5, 4) - r(2, 3) + r(1)) *
                            (r(5, 4) - r(2, 3) + r(2)) / (r(5, 4) * r(9, 4) * r(13, 4));
  EXPECT_EQ(hyperpsi::terminating_pfq(spec).value, expected);
  EXPECT_EQ(hyperpsi::truncated_pfq(spec, 40).value, expected);
  EXPECT_THROW(hyperpsi::terminating_pfq(hyperpsi::make_series({r(1)}, {r(2)})),
               hyperpsi::DomainError);
}

TEST(SeriesSpec, ParseAndPrint) {
  const auto spec = SeriesSpec::parse("3F2(1, 1, 13; 2, 14; 1)");
  EXPECT_EQ(spec, hyperpsi::make_series({r(1), r(1), r(13)}, {r(2), r(14)}));
  EXPECT_EQ(spec.to_string(), "3F2(1,1,13;2,14;1)");
  EXPECT_EQ(SeriesSpec::parse(spec.to_string()), spec);
  EXPECT_EQ(SeriesSpec::parse("0F0(;;1/2)").argument, r(1, 2));
  EXPECT_EQ(SeriesSpec::parse("2F1(-1/2,4/6;3;-2)").to_string(), "2F1(-1/2,2/3;3;-2)");
}

TEST(SeriesSpec, ParseErrors) {
  EXPECT_THROW(SeriesSpec::parse("3F2(1,1;2,14;1)"), hyperpsi::ParseError);
  EXPECT_THROW(SeriesSpec::parse("2F1(1,1;2)"), hyperpsi::ParseError);
  EXPECT_THROW(SeriesSpec::parse("2F1(1,x;2;1)"), hyperpsi::ParseError);
  EXPECT_THROW(SeriesSpec::parse("2F1(1,1;0;1)"), hyperpsi::DomainError);
}

TEST(GaussCollapse, Examples) {
  EXPECT_EQ(hyperpsi::gauss_truncated_closed_form(r(1), r(1), 3), r(8, 5));
  EXPECT_EQ(hyperpsi::gauss_truncated_closed_form(r(1), r(1), 0), r(1));
}

// (3/2)_1^2 / ((2)_1 · 1!) = 9/8; the direct sum 1 + (1/4)/2 agrees.
TEST(GaussCollapse, HalfHalfFirstTruncation) {
  const Rational closed = hyperpsi::gauss_truncated_closed_form(r(1, 2), r(1, 2), 1);
  EXPECT_EQ(closed, r(9, 8));
  const auto spec = hyperpsi::gauss_collapse_spec(r(1, 2), r(1, 2));
  EXPECT_EQ(hyperpsi::truncated_pfq(spec, 1).value, closed);
  EXPECT_EQ(oracle::str(oracle::pfq_sum({mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(2)}, 1, 1)),
            "9/8");
}

TEST(GaussCollapse, RandomRationals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = r(static_cast<std::int64_t>(rng() % 9) + 1, static_cast<std::int64_t>(rng() % 9) + 1);
    const Rational b = r(static_cast<std::int64_t>(rng() % 9) + 1, static_cast<std::int64_t>(rng() % 9) + 1);
    const auto n = static_cast<hyperpsi::Nat>(rng() % 21);
    EXPECT_EQ(hyperpsi::truncated_pfq(hyperpsi::gauss_collapse_spec(a, b), n).value,
              hyperpsi::gauss_truncated_closed_form(a, b, n));
  }
}
