#pragma once

// Exact rational scalar type and the numeric policy used by every algorithm
// in this library. All decisions (region boundaries, criticality of an
// index, usefulness of a catalyst) reduce to ratio comparisons that must be
// decided exactly; Rat is an arbitrary-precision rational so that none of
// them can be misclassified by rounding. A double backend with a fixed
// relative tolerance is provided for large sweeps only.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entcat {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Numeric policy: how a scalar backend compares values and imports exact
/// rationals. The Rat specialization is exact; the double one compares up
/// to a relative tolerance of 1e-12.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;

  static bool eq(const Rat& a, const Rat& b) { return a == b; }
  static bool lt(const Rat& a, const Rat& b) { return a < b; }
  static bool le(const Rat& a, const Rat& b) { return a <= b; }

  static Rat from_rat(const Rat& r) { return r; }
  static Rat from_fraction(long num, long den) { return Rat(num, den); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr double relative_tolerance = 1e-12;

  static bool eq(double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= relative_tolerance * scale;
  }
  static bool lt(double a, double b) { return a < b && !eq(a, b); }
  static bool le(double a, double b) { return a < b || eq(a, b); }

  static double from_rat(const Rat& r) { return r.convert_to<double>(); }
  static double from_fraction(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

inline BigInt pow10(std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace detail

/// Parses one scalar literal: a decimal ("0.801", ".5", "2") or a fraction
/// ("801/1000"). Decimals convert exactly, e.g. 0.801 -> 801/1000. Embedded
/// whitespace is ignored. Throws std::invalid_argument on anything else.
inline Rat parse_rational(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  const std::string original(text);
  if (s.empty()) throw std::invalid_argument("empty number literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("bad number literal '" + original + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string_view num_part(s.data(), slash);
    const std::string_view den_part(s.data() + slash + 1, s.size() - slash - 1);
    if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
      throw std::invalid_argument("bad fraction literal '" + original + "'");
    BigInt den{std::string(den_part)};
    if (den == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rat(BigInt{std::string(num_part)}, den);
  } else {
    std::string int_part = s;
    std::string frac_part;
    if (auto dot = s.find('.'); dot != std::string::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("bad number literal '" + original + "'");
    }
    if (!int_part.empty() && !detail::all_digits(int_part))
      throw std::invalid_argument("bad number literal '" + original + "'");
    if (!frac_part.empty() && !detail::all_digits(frac_part))
      throw std::invalid_argument("bad number literal '" + original + "'");
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("bad number literal '" + original + "'");
    BigInt scaled = int_part.empty() ? BigInt(0) : BigInt(int_part);
    const BigInt scale = detail::pow10(frac_part.size());
    scaled *= scale;
    if (!frac_part.empty()) scaled += BigInt(frac_part);
    value = Rat(scaled, scale);
  }
  return negative ? Rat(-value) : value;
}

/// "4/5" for proper fractions, "3" when the denominator is 1.
inline std::string to_fraction_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Fixed-point rendering with `significant` significant digits, rounding
/// half away from zero: 4/5 -> "0.800000", 122/135 -> "0.903704".
inline std::string to_decimal_string(const Rat& value, int significant = 6) {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (value == 0) return "0";
  if (value < 0) return "-" + to_decimal_string(-value, significant);

  // exponent e with 10^e <= value < 10^(e+1)
  long e = 0;
  Rat probe = value;
  while (probe >= 10) {
    probe /= 10;
    ++e;
  }
  while (probe < 1) {
    probe *= 10;
    --e;
  }

  // round value * 10^(significant-1-e) half away from zero
  const long shift = significant - 1 - e;
  Rat scaled = value;
  if (shift >= 0)
    scaled *= Rat(detail::pow10(static_cast<std::size_t>(shift)));
  else
    scaled /= Rat(detail::pow10(static_cast<std::size_t>(-shift)));
  BigInt digits = (2 * numerator(scaled) + denominator(scaled)) / (2 * denominator(scaled));

  std::string digs = digits.str();
  if (digs.size() > static_cast<std::size_t>(significant)) {
    // rounding carried into an extra digit (e.g. 0.99999 -> 1.0000)
    digs.pop_back();
    ++e;
  }

  std::string out;
  if (e >= 0) {
    if (e + 1 >= static_cast<long>(digs.size())) {
      out = digs + std::string(static_cast<std::size_t>(e + 1) - digs.size(), '0');
    } else {
      out = digs.substr(0, static_cast<std::size_t>(e + 1)) + "." +
            digs.substr(static_cast<std::size_t>(e + 1));
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digs;
  }
  return out;
}

/// Exact power with a nonnegative integer exponent by repeated multiplication.
inline Rat pow_rat(const Rat& base, unsigned exponent) {
  Rat r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Splits a comma-separated vector literal ("0.6, 0.2, 1/5") into exact
/// rationals. Whitespace is ignored everywhere.
inline std::vector<Rat> parse_vector_literal(std::string_view text) {
  std::vector<Rat> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    entries.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return entries;
}

/// Deterministic unbiased draw from {0, ..., bound-1}. Written out instead
/// of std::uniform_int_distribution so that a seed reproduces the same
/// samples on every standard library.
inline std::uint64_t uniform_below(std::uint64_t bound, auto& rng) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t reject_above = max - (max % bound + 1) % bound;
  while (true) {
    const std::uint64_t v = rng();
    if (v <= reject_above) return v % bound;
  }
}

}  // namespace entcat
