#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpsi/rational.hpp"

namespace hyperpsi {

enum class TableFormat { markdown, csv, json };

/// "markdown" | "md" | "csv" | "json"; UsageError otherwise.
TableFormat parse_table_format(std::string_view name);

struct TableRow {
  Nat index = 0;
  std::string label;
  // Rational "p/q" (Clausen rows) or "-γ + p/q" (digamma rows).
  std::string exact_value;
  std::optional<std::string> decimal_preview;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Rows for m in [m_min, m_max]: 3F2(1,1,m+1;2,m+2;1) exactly, optionally
// with a decimal rounded to `decimal_digits` places. Rows are computed in
// parallel; the _serial variants are the reference loop.
std::vector<TableRow> clausen_rows(Nat m_min, Nat m_max, std::optional<unsigned> decimal_digits);
std::vector<TableRow> clausen_rows_serial(Nat m_min, Nat m_max,
                                          std::optional<unsigned> decimal_digits);

// Rows for z in [1, z_max]: ψ(z) = -γ + H_{z-1}. The decimal column uses
// γ rounded to `decimal_digits` places.
std::vector<TableRow> digamma_rows(Nat z_max, std::optional<unsigned> decimal_digits);
std::vector<TableRow> digamma_rows_serial(Nat z_max, std::optional<unsigned> decimal_digits);

/// Whole documents. The Clausen table is indexed by m: the m = 1 row is
/// 3F2(1,1,2;2,3;1) = 2, and m = 2 is 3F2(1,1,3;2,4;1) = 9/4.
std::string emit_clausen_table(Nat m_min, Nat m_max, TableFormat format,
                               std::optional<unsigned> decimal_digits = std::nullopt);
std::string emit_digamma_table(Nat z_max, TableFormat format,
                               std::optional<unsigned> decimal_digits = std::nullopt);

}  // namespace hyperpsi
