#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/tables.hpp"

using hyperpsi::Rational;
using hyperpsi::TableFormat;

TEST(Tables, SerialAndParallelRowsAgree) {
  EXPECT_EQ(hyperpsi::clausen_rows(1, 200, 12), hyperpsi::clausen_rows_serial(1, 200, 12));
  EXPECT_EQ(hyperpsi::clausen_rows(7, 9, std::nullopt), hyperpsi::clausen_rows_serial(7, 9, std::nullopt));
  EXPECT_EQ(hyperpsi::digamma_rows(200, 20), hyperpsi::digamma_rows_serial(200, 20));
}

TEST(Tables, CsvGoldenRows) {
  EXPECT_EQ(hyperpsi::emit_clausen_table(1, 3, TableFormat::csv), "m, 3F2\n1, 2\n2, 9/4\n3, 22/9\n");
  EXPECT_EQ(hyperpsi::emit_clausen_table(2, 2, TableFormat::csv), "m, 3F2\n2, 9/4\n");
  EXPECT_EQ(hyperpsi::emit_digamma_table(3, TableFormat::csv),
            "z, psi(z)\n1, -γ\n2, -γ + 1\n3, -γ + 3/2\n");
  EXPECT_EQ(hyperpsi::emit_clausen_table(2, 2, TableFormat::csv, 5), "m, 3F2, decimal\n2, 9/4, 2.25000\n");
}

TEST(Tables, JsonSchema) {
  const auto doc = nlohmann::json::parse(hyperpsi::emit_digamma_table(10, TableFormat::json, 10));
  EXPECT_EQ(doc["table"], "digamma");
  ASSERT_EQ(doc["rows"].size(), 10U);
  EXPECT_EQ(doc["rows"][9]["z"], 10);
  EXPECT_EQ(doc["rows"][9]["value"], "-γ + 7129/2520");
  EXPECT_EQ(doc["rows"][0]["decimal"], "-0.5772156649");

  const auto clausen = nlohmann::json::parse(hyperpsi::emit_clausen_table(1, 2, TableFormat::json));
  EXPECT_EQ(clausen["table"], "clausen_3f2");
  EXPECT_EQ(clausen["rows"][1]["m"], 2);
  EXPECT_EQ(clausen["rows"][1]["value"], "9/4");
  EXPECT_FALSE(clausen["rows"][1].contains("decimal"));
}

TEST(Tables, MarkdownHasEveryRow) {
  const std::string doc = hyperpsi::emit_clausen_table(1, 51, TableFormat::markdown);
  EXPECT_EQ(doc.rfind("### ", 0), 0U);
  for (hyperpsi::Nat m = 1; m <= 51; ++m) {
    const std::string cell = "| " + std::to_string(m) + " | " +
                             hyperpsi::clausen_3f2_closed_form(m).to_string() + " |";
    EXPECT_NE(doc.find(cell), std::string::npos) << m;
  }
}

TEST(Tables, ExactValuesRoundTrip) {
  for (const auto& row : hyperpsi::clausen_rows(1, 60, std::nullopt)) {
    EXPECT_EQ(Rational::parse(row.exact_value).to_string(), row.exact_value);
  }
  for (const auto& row : hyperpsi::digamma_rows(60, std::nullopt)) {
    EXPECT_EQ(hyperpsi::DigammaExact::parse(row.exact_value).to_string(), row.exact_value);
  }
}

TEST(Tables, Deterministic) {
  for (auto format : {TableFormat::markdown, TableFormat::csv, TableFormat::json}) {
    EXPECT_EQ(hyperpsi::emit_clausen_table(1, 51, format, 15),
              hyperpsi::emit_clausen_table(1, 51, format, 15));
    EXPECT_EQ(hyperpsi::emit_digamma_table(52, format, 15), hyperpsi::emit_digamma_table(52, format, 15));
  }
}

TEST(Tables, InvalidArguments) {
  EXPECT_THROW(hyperpsi::emit_clausen_table(0, 3, TableFormat::csv), hyperpsi::UsageError);
  EXPECT_THROW(hyperpsi::emit_clausen_table(5, 3, TableFormat::csv), hyperpsi::UsageError);
  EXPECT_THROW(hyperpsi::emit_digamma_table(0, TableFormat::csv), hyperpsi::UsageError);
  EXPECT_THROW(hyperpsi::parse_table_format("xml"), hyperpsi::UsageError);
  EXPECT_EQ(hyperpsi::parse_table_format("md"), TableFormat::markdown);
}

// The reference tables, one misprinted entry aside, agree with the closed forms.
TEST(Tables, ReferenceTablesMatchExceptKnownMisprint) {
  std::ifstream in(HYPERPSI_TEST_DATA "/reference_tables.txt");
  ASSERT_TRUE(in);
  std::string line;
  int clausen = 0;
  int digamma = 0;
  std::vector<hyperpsi::Nat> mismatches;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind, value;
    hyperpsi::Nat index = 0;
    fields >> kind >> index >> value;
    if (kind == "clausen") {
      ++clausen;
      if (hyperpsi::clausen_3f2_closed_form(index) != Rational::parse(value)) mismatches.push_back(index);
    } else {
      ++digamma;
      EXPECT_EQ(hyperpsi::digamma_exact(index).rational_part, Rational::parse(value)) << index;
    }
  }
  EXPECT_EQ(clausen, 50);
  EXPECT_EQ(digamma, 52);
  EXPECT_EQ(mismatches, std::vector<hyperpsi::Nat>{24});
}
