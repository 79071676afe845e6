#ifndef IVL_IO_TEXT_HPP
#define IVL_IO_TEXT_HPP

// Text form of intervals: "[lo,hi]" with "inf" / "-inf" for infinite
// endpoints. Endpoints print with 17 significant digits, so every printed
// interval reparses to the identical value.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>

#include "ivl/error.hpp"
#include "ivl/extended.hpp"
#include "ivl/interval.hpp"
#include "ivl/kinterval.hpp"

namespace ivl {

inline std::string format_endpoint(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string to_string(const Interval& a) {
  return "[" + format_endpoint(a.lo()) + "," + format_endpoint(a.hi()) + "]";
}

/// Endpoint order is preserved; improper intervals print reversed.
inline std::string to_string(const KInterval& k) {
  return "[" + format_endpoint(k.lo()) + "," + format_endpoint(k.hi()) + "]";
}

inline std::string to_string(const ExtendedDivResult& r) {
  switch (r.kind()) {
    case ExtendedDivResult::Kind::Empty: return "empty";
    case ExtendedDivResult::Kind::WholeLine: return "entire";
    case ExtendedDivResult::Kind::Single: return to_string(r.parts()[0]);
    case ExtendedDivResult::Kind::Pair: return to_string(r.parts()[0]) + " | " + to_string(r.parts()[1]);
  }
  return {};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a decimal number or an "inf" / "-inf" / "+inf" token, rounding to
/// nearest.
inline double parse_endpoint(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s == "inf" || s == "+inf") return rounding::inf;
  if (s == "-inf") return -rounding::inf;
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || std::isnan(value)) {
    throw error(errc::parse_error, "bad number '" + std::string(s) + "'");
  }
  return value;
}

namespace detail {

inline std::pair<double, double> parse_endpoint_pair(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw error(errc::parse_error, "expected '[lo,hi]', got '" + std::string(s) + "'");
  }
  const std::string_view body = s.substr(1, s.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw error(errc::parse_error, "expected exactly one ',' in '" + std::string(s) + "'");
  }
  return {parse_endpoint(body.substr(0, comma)), parse_endpoint(body.substr(comma + 1))};
}

}  // namespace detail

inline Interval parse_interval(std::string_view text) {
  const auto [lo, hi] = detail::parse_endpoint_pair(text);
  return Interval::make(lo, hi);
}

inline KInterval parse_kinterval(std::string_view text) {
  const auto [lo, hi] = detail::parse_endpoint_pair(text);
  return {lo, hi};
}

}  // namespace ivl

#endif  // IVL_IO_TEXT_HPP
