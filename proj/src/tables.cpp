#include "hyperpsi/tables.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "hyperpsi/digamma.hpp"
#include "hyperpsi/errors.hpp"
#include "hyperpsi/numeric_value.hpp"

namespace hyperpsi {

namespace {

std::string rounded(const Rational& x, unsigned digits) {
  return format_fixed(round_scaled(x, digits), digits, digits);
}

std::string clausen_label(Nat m) {
  return "3F2(1,1," + std::to_string(m + 1) + ";2," + std::to_string(m + 2) + ";1)";
}

TableRow clausen_row(Nat m, const std::optional<unsigned>& digits) {
  const Rational value = clausen_3f2_closed_form(m);
  TableRow row{m, clausen_label(m), value.to_string(), std::nullopt};
  if (digits) {
    row.decimal_preview = rounded(value, *digits);
  }
  return row;
}

TableRow digamma_row(Nat z, const std::optional<Rational>& gamma,
                     const std::optional<unsigned>& digits) {
  const DigammaExact value = digamma_exact(z);
  TableRow row{z, "psi(" + std::to_string(z) + ")", value.to_string(), std::nullopt};
  if (gamma) {
    row.decimal_preview = rounded(value.rational_part - *gamma, *digits);
  }
  return row;
}

void check_clausen_range(Nat m_min, Nat m_max) {
  if (m_min < 1 || m_min > m_max) {
    throw UsageError("need 1 <= m_min <= m_max, got " + std::to_string(m_min) + ".." +
                     std::to_string(m_max));
  }
}

std::optional<Rational> gamma_for(const std::optional<unsigned>& digits) {
  if (!digits) {
    return std::nullopt;
  }
  return gamma_constant(*digits).approximation();
}

void check_digamma_range(Nat z_max) {
  if (z_max < 1) {
    throw UsageError("need z_max >= 1");
  }
}

// Two side-by-side column groups, left half first.
std::string markdown_table(const std::string& title, const std::string& key,
                           const std::string& value_header, const std::vector<TableRow>& rows,
                           bool with_decimal) {
  std::ostringstream out;
  out << "### " << title << "\n\n";
  std::string group = "| " + key + " | " + value_header + " |";
  std::string rule = "|---:|:---|";
  if (with_decimal) {
    group += " decimal |";
    rule += "---:|";
  }
  out << group << group.substr(1) << "\n" << rule << rule.substr(1) << "\n";
  const std::size_t left = (rows.size() + 1) / 2;
  auto cells = [&](const TableRow* row) {
    std::string s;
    if (row == nullptr) {
      s = "  |  |";
      if (with_decimal) {
        s += "  |";
      }
      return s;
    }
    s = " " + std::to_string(row->index) + " | " + row->exact_value + " |";
    if (with_decimal) {
      s += " " + row->decimal_preview.value_or("") + " |";
    }
    return s;
  };
  for (std::size_t i = 0; i < left; ++i) {
    const TableRow* right = i + left < rows.size() ? &rows[i + left] : nullptr;
    out << "|" << cells(&rows[i]) << cells(right) << "\n";
  }
  return out.str();
}

std::string csv_table(const std::string& key, const std::string& value_header,
                      const std::vector<TableRow>& rows, bool with_decimal) {
  std::ostringstream out;
  out << key << ", " << value_header << (with_decimal ? ", decimal" : "") << "\n";
  for (const TableRow& row : rows) {
    out << row.index << ", " << row.exact_value;
    if (with_decimal) {
      out << ", " << row.decimal_preview.value_or("");
    }
    out << "\n";
  }
  return out.str();
}

std::string json_table(const std::string& name, const std::string& key,
                       const std::vector<TableRow>& rows) {
  nlohmann::ordered_json doc;
  doc["table"] = name;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json r;
    r[key] = row.index;
    r["value"] = row.exact_value;
    if (row.decimal_preview) {
      r["decimal"] = *row.decimal_preview;
    }
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string render(TableFormat format, const std::string& name, const std::string& title,
                   const std::string& key, const std::string& value_header,
                   const std::vector<TableRow>& rows, bool with_decimal) {
  switch (format) {
    case TableFormat::markdown:
      return markdown_table(title, key, value_header, rows, with_decimal);
    case TableFormat::csv:
      return csv_table(key, value_header, rows, with_decimal);
    case TableFormat::json:
      return json_table(name, key, rows);
  }
  return {};
}

}  // namespace

TableFormat parse_table_format(std::string_view name) {
  if (name == "markdown" || name == "md") {
    return TableFormat::markdown;
  }
  if (name == "csv") {
    return TableFormat::csv;
  }
  if (name == "json") {
    return TableFormat::json;
  }
  throw UsageError("unknown format '" + std::string(name) + "' (markdown, csv, json)");
}

std::vector<TableRow> clausen_rows(Nat m_min, Nat m_max, std::optional<unsigned> decimal_digits) {
  check_clausen_range(m_min, m_max);
  const auto count = static_cast<std::int64_t>(m_max - m_min + 1);
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
  // Row cost grows with m; dynamic scheduling balances it.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    rows[static_cast<std::size_t>(i)] = clausen_row(m_min + static_cast<Nat>(i), decimal_digits);
  }
  return rows;
}

std::vector<TableRow> clausen_rows_serial(Nat m_min, Nat m_max,
                                          std::optional<unsigned> decimal_digits) {
  check_clausen_range(m_min, m_max);
  std::vector<TableRow> rows;
  rows.reserve(m_max - m_min + 1);
  for (Nat m = m_min; m <= m_max; ++m) {
    rows.push_back(clausen_row(m, decimal_digits));
  }
  return rows;
}

std::vector<TableRow> digamma_rows(Nat z_max, std::optional<unsigned> decimal_digits) {
  check_digamma_range(z_max);
  const std::optional<Rational> gamma = gamma_for(decimal_digits);
  const auto count = static_cast<std::int64_t>(z_max);
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    rows[static_cast<std::size_t>(i)] = digamma_row(static_cast<Nat>(i) + 1, gamma, decimal_digits);
  }
  return rows;
}

std::vector<TableRow> digamma_rows_serial(Nat z_max, std::optional<unsigned> decimal_digits) {
  check_digamma_range(z_max);
  const std::optional<Rational> gamma = gamma_for(decimal_digits);
  std::vector<TableRow> rows;
  rows.reserve(z_max);
  for (Nat z = 1; z <= z_max; ++z) {
    rows.push_back(digamma_row(z, gamma, decimal_digits));
  }
  return rows;
}

std::string emit_clausen_table(Nat m_min, Nat m_max, TableFormat format,
                               std::optional<unsigned> decimal_digits) {
  const auto rows = clausen_rows(m_min, m_max, decimal_digits);
  return render(format, "clausen_3f2", "3F2(1, 1, m+1; 2, m+2; 1)", "m", "3F2", rows,
                decimal_digits.has_value());
}

std::string emit_digamma_table(Nat z_max, TableFormat format,
                               std::optional<unsigned> decimal_digits) {
  const auto rows = digamma_rows(z_max, decimal_digits);
  return render(format, "digamma", "psi(z) for positive integers", "z", "psi(z)", rows,
                decimal_digits.has_value());
}

}  // namespace hyperpsi
