#ifndef IVL_ROUNDING_HPP
#define IVL_ROUNDING_HPP

// Directed rounding without touching the FPU rounding mode.
//
// Every operation is evaluated in round-to-nearest and the sign of the exact
// rounding error is recovered with an error-free transformation (TwoSum for
// sums, fma for products and quotients). An endpoint moves one ulp outward
// only when the nearest result lies on the wrong side of the exact one, so
// exact operations stay exact and the result is the correctly directed one.
// Near the underflow range, where the error term itself may not be
// representable, the nudge is applied unconditionally.

#include <cmath>
#include <limits>

namespace ivl::rounding {

inline constexpr double inf = std::numeric_limits<double>::infinity();
inline constexpr double max_finite = std::numeric_limits<double>::max();

// Below this magnitude an fma residual can underflow and lose its sign.
inline constexpr double tiny = 0x1p-960;

inline double next_down(double x) noexcept { return std::nextafter(x, -inf); }
inline double next_up(double x) noexcept { return std::nextafter(x, inf); }

namespace detail {

// Rounded result r of an exact value v that overflowed, with finite operands.
inline double overflow_down(double r) noexcept { return r > 0 ? max_finite : r; }
inline double overflow_up(double r) noexcept { return r < 0 ? -max_finite : r; }

// Sign of (exact - rounded) for a + b.
inline double sum_error(double a, double b, double s) noexcept {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

}  // namespace detail

inline double add_down(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return (std::isfinite(a) && std::isfinite(b)) ? detail::overflow_down(s) : s;
  }
  return detail::sum_error(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return (std::isfinite(a) && std::isfinite(b)) ? detail::overflow_up(s) : s;
  }
  return detail::sum_error(a, b, s) > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) noexcept { return add_down(a, -b); }
inline double sub_up(double a, double b) noexcept { return add_up(a, -b); }

// 0 * inf is taken as 0: a zero factor stands for a degenerate zero operand.
inline double mul_down(double a, double b) noexcept {
  if (a == 0 || b == 0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return (std::isfinite(a) && std::isfinite(b)) ? detail::overflow_down(p) : p;
  }
  if (std::fabs(p) < tiny) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) noexcept {
  if (a == 0 || b == 0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return (std::isfinite(a) && std::isfinite(b)) ? detail::overflow_up(p) : p;
  }
  if (std::fabs(p) < tiny) return next_up(p);
  return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

// Quotients: x / +-inf is 0 for finite x. Callers never pass a zero or
// doubly infinite operand pair.
namespace detail {

// > 0 when the rounded quotient q lies above a / b.
inline double quotient_excess(double a, double b, double q) noexcept {
  const double r = std::fma(q, b, -a);  // q*b - a, exact in the normal range
  return b > 0 ? r : -r;
}

}  // namespace detail

inline double div_down(double a, double b) noexcept {
  if (a == 0) return 0.0;
  if (std::isinf(b)) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    return std::isfinite(a) ? detail::overflow_down(q) : q;
  }
  if (std::fabs(q) < tiny || std::fabs(a) < tiny) return next_down(q);
  return detail::quotient_excess(a, b, q) > 0 ? next_down(q) : q;
}

inline double div_up(double a, double b) noexcept {
  if (a == 0) return 0.0;
  if (std::isinf(b)) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    return std::isfinite(a) ? detail::overflow_up(q) : q;
  }
  if (std::fabs(q) < tiny || std::fabs(a) < tiny) return next_up(q);
  return detail::quotient_excess(a, b, q) < 0 ? next_up(q) : q;
}

// x^n for x >= 0 by repeated squaring; every partial product is nonnegative,
// so directed rounding composes monotonically.
inline double pow_down(double x, unsigned n) noexcept {
  double result = 1.0;
  double base = x;
  while (n != 0) {
    if (n & 1u) result = mul_down(result, base);
    n >>= 1;
    if (n != 0) base = mul_down(base, base);
  }
  return result;
}

inline double pow_up(double x, unsigned n) noexcept {
  double result = 1.0;
  double base = x;
  while (n != 0) {
    if (n & 1u) result = mul_up(result, base);
    n >>= 1;
    if (n != 0) base = mul_up(base, base);
  }
  return result;
}

}  // namespace ivl::rounding

#endif  // IVL_ROUNDING_HPP
