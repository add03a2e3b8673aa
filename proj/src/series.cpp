#include "hyperpsi/series.hpp"

#include <cctype>
#include <charconv>

#include "hyperpsi/errors.hpp"

namespace hyperpsi {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Rational> parse_list(std::string_view s) {
  std::vector<Rational> out;
  s = trim(s);
  if (s.empty()) {
    return out;
  }
  while (true) {
    const auto comma = s.find(',');
    out.push_back(Rational::parse(s.substr(0, comma)));
    if (comma == std::string_view::npos) {
      break;
    }
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad series header in '" + std::string(whole) + "'");
  }
  return value;
}

void append_list(std::string& out, const std::vector<Rational>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += xs[i].to_string();
  }
}

}  // namespace

SeriesSpec SeriesSpec::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto f = text.find_first_of("Ff");
  const auto open = text.find('(');
  if (f == std::string_view::npos || open == std::string_view::npos || open < f ||
      text.back() != ')') {
    throw ParseError("expected pFq(a...;b...;z), got '" + std::string(whole) + "'");
  }
  const std::size_t p = parse_count(trim(text.substr(0, f)), whole);
  const std::size_t q = parse_count(trim(text.substr(f + 1, open - f - 1)), whole);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  const auto semi1 = body.find(';');
  const auto semi2 = semi1 == std::string_view::npos ? semi1 : body.find(';', semi1 + 1);
  if (semi2 == std::string_view::npos || body.find(';', semi2 + 1) != std::string_view::npos) {
    throw ParseError("expected two ';' separators in '" + std::string(whole) + "'");
  }
  SeriesSpec spec;
  spec.numerator_params = parse_list(body.substr(0, semi1));
  spec.denominator_params = parse_list(body.substr(semi1 + 1, semi2 - semi1 - 1));
  spec.argument = Rational::parse(body.substr(semi2 + 1));
  if (spec.numerator_params.size() != p || spec.denominator_params.size() != q) {
    throw ParseError("parameter counts do not match header in '" + std::string(whole) + "'");
  }
  spec.validate();
  return spec;
}

std::string SeriesSpec::to_string() const {
  std::string out = std::to_string(numerator_params.size()) + "F" +
                    std::to_string(denominator_params.size()) + "(";
  append_list(out, numerator_params);
  out += ';';
  append_list(out, denominator_params);
  out += ';';
  out += argument.to_string();
  out += ')';
  return out;
}

void SeriesSpec::validate() const {
  for (std::size_t j = 0; j < denominator_params.size(); ++j) {
    if (denominator_params[j].is_nonpositive_integer()) {
      throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " +
                        denominator_params[j].to_string() + " is a nonpositive integer");
    }
  }
}

std::optional<Nat> SeriesSpec::terminating_order() const {
  std::optional<Nat> order;
  for (const Rational& a : numerator_params) {
    if (a.is_nonpositive_integer()) {
      const Nat p = static_cast<Nat>((-a).numerator().get_ui());
      if (!order || p < *order) {
        order = p;
      }
    }
  }
  if (!order && argument.is_zero()) {
    order = 0;
  }
  return order;
}

SeriesSpec make_series(std::vector<Rational> upper, std::vector<Rational> lower,
                       Rational argument) {
  SeriesSpec spec{std::move(upper), std::move(lower), std::move(argument)};
  spec.validate();
  return spec;
}

TruncatedSum truncated_pfq(const SeriesSpec& spec, Nat n) {
  // term_k = tn/td and partial sum = sn/td share one denominator; the
  // factors stay unreduced until the end.
  BigInt tn = 1;
  BigInt td = 1;
  BigInt sn = 1;
  const BigInt zn = spec.argument.numerator();
  const BigInt zd = spec.argument.denominator();
  for (Nat k = 0; k < n; ++k) {
    const Rational shift(static_cast<std::int64_t>(k));
    BigInt rn = zn;
    BigInt rd = zd * static_cast<unsigned long>(k + 1);
    for (const Rational& a : spec.numerator_params) {
      const Rational f = a + shift;
      rn *= f.numerator();
      rd *= f.denominator();
    }
    if (rn == 0) {
      break;
    }
    for (std::size_t j = 0; j < spec.denominator_params.size(); ++j) {
      const Rational f = spec.denominator_params[j] + shift;
      if (f.is_zero()) {
        throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " +
                          spec.denominator_params[j].to_string() + " vanishes at k = " +
                          std::to_string(k));
      }
      rn *= f.denominator();
      rd *= f.numerator();
    }
    tn *= rn;
    td *= rd;
    sn = sn * rd + tn;
  }
  return TruncatedSum{Rational::normalize(sn, td), n + 1};
}

TruncatedSum terminating_pfq(const SeriesSpec& spec) {
  const auto order = spec.terminating_order();
  if (!order) {
    throw DomainError(spec.to_string() + " does not terminate");
  }
  return truncated_pfq(spec, *order);
}

}  // namespace hyperpsi
