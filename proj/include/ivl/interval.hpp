#ifndef IVL_INTERVAL_HPP
#define IVL_INTERVAL_HPP

// Classical interval arithmetic over closed intervals [lo, hi] with
// extended-real endpoints. All results are rounded outward.

#include <algorithm>
#include <cmath>
#include <optional>

#include "ivl/error.hpp"
#include "ivl/rounding.hpp"

namespace ivl {

class Interval;

namespace detail {
Interval make_unchecked(double lo, double hi) noexcept;
}

class Interval {
 public:
  /// The degenerate interval [0, 0].
  constexpr Interval() noexcept = default;

  /// Throws ReversedEndpoints when lo > hi; +inf as lo or -inf as hi is
  /// rejected as well.
  static Interval make(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) {
      throw error(errc::invalid_argument, "NaN endpoint");
    }
    if (lo > hi) throw error(errc::reversed_endpoints, "lo > hi");
    if (lo == rounding::inf || hi == -rounding::inf) {
      throw error(errc::invalid_argument, "degenerate infinite interval");
    }
    return Interval(lo, hi);
  }

  static Interval point(double x) { return make(x, x); }
  static Interval entire() noexcept { return Interval(-rounding::inf, rounding::inf); }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }

  bool is_finite() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }
  bool is_point() const noexcept { return lo_ == hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) noexcept = default;

 private:
  constexpr Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}

  // Results of outward-rounded operations on valid operands are valid by
  // construction and skip the checks in make().
  friend Interval detail::make_unchecked(double lo, double hi) noexcept;

  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Empty arises only from set operations; arithmetic never accepts it.
using MaybeInterval = std::optional<Interval>;

inline Interval detail::make_unchecked(double lo, double hi) noexcept { return Interval(lo, hi); }

inline bool contains(const Interval& a, double x) noexcept { return a.lo() <= x && x <= a.hi(); }
inline bool contains_zero(const Interval& a) noexcept { return contains(a, 0.0); }

/// a ⊆ b
inline bool subset(const Interval& a, const Interval& b) noexcept {
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

/// a lies in the topological interior of b.
inline bool interior_subset(const Interval& a, const Interval& b) noexcept {
  return b.lo() < a.lo() && a.hi() < b.hi();
}

// ---- arithmetic -----------------------------------------------------------

inline Interval operator+(const Interval& a, const Interval& b) {
  const double lo = rounding::add_down(a.lo(), b.lo());
  const double hi = rounding::add_up(a.hi(), b.hi());
  if (std::isnan(lo) || std::isnan(hi)) {
    throw error(errc::indeterminate_form, "inf - inf in interval addition");
  }
  return ivl::detail::make_unchecked(lo, hi);
}

inline Interval operator-(const Interval& a) noexcept { return ivl::detail::make_unchecked(-a.hi(), -a.lo()); }

inline Interval operator-(const Interval& a, const Interval& b) {
  const double lo = rounding::sub_down(a.lo(), b.hi());
  const double hi = rounding::sub_up(a.hi(), b.lo());
  if (std::isnan(lo) || std::isnan(hi)) {
    throw error(errc::indeterminate_form, "inf - inf in interval subtraction");
  }
  return ivl::detail::make_unchecked(lo, hi);
}

inline Interval operator*(const Interval& a, const Interval& b) noexcept {
  using namespace rounding;
  const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                              mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())});
  const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                              mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())});
  return ivl::detail::make_unchecked(lo, hi);
}

/// Classical reciprocal [1/hi, 1/lo]; 0 must not lie in b.
inline Interval reciprocal(const Interval& b) {
  if (contains_zero(b)) throw error(errc::zero_in_divisor, "0 in divisor");
  return ivl::detail::make_unchecked(rounding::div_down(1.0, b.hi()), rounding::div_up(1.0, b.lo()));
}

/// a / b = a * [1/b.hi, 1/b.lo]. Throws ZeroInDivisor when 0 ∈ b; see
/// ivl::ediv for division by zero-containing intervals.
inline Interval operator/(const Interval& a, const Interval& b) { return a * reciprocal(b); }

/// Exact range {x^n : x ∈ a}, unlike repeated multiplication which ignores
/// the dependency between factors.
inline Interval int_pow(const Interval& a, unsigned n) noexcept {
  using namespace rounding;
  if (n == 0) return ivl::detail::make_unchecked(1.0, 1.0);
  if (n % 2 == 1) {
    const double lo = a.lo() >= 0 ? pow_down(a.lo(), n) : -pow_up(-a.lo(), n);
    const double hi = a.hi() >= 0 ? pow_up(a.hi(), n) : -pow_down(-a.hi(), n);
    return ivl::detail::make_unchecked(lo, hi);
  }
  if (a.lo() >= 0) return ivl::detail::make_unchecked(pow_down(a.lo(), n), pow_up(a.hi(), n));
  if (a.hi() <= 0) return ivl::detail::make_unchecked(pow_down(-a.hi(), n), pow_up(-a.lo(), n));
  return ivl::detail::make_unchecked(0.0, pow_up(std::max(-a.lo(), a.hi()), n));
}

// ---- set operations -------------------------------------------------------

inline MaybeInterval intersect(const Interval& a, const Interval& b) noexcept {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return ivl::detail::make_unchecked(lo, hi);
}

inline Interval hull(const Interval& a, const Interval& b) noexcept {
  return ivl::detail::make_unchecked(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// ---- metric and geometry --------------------------------------------------

inline void require_finite(const Interval& a, const char* what) {
  if (!a.is_finite()) throw error(errc::infinite_endpoint, what);
}

/// max(|a.lo - b.lo|, |a.hi - b.hi|), rounded up.
inline double dist(const Interval& a, const Interval& b) {
  require_finite(a, "dist");
  require_finite(b, "dist");
  const double dl = a.lo() >= b.lo() ? rounding::sub_up(a.lo(), b.lo()) : rounding::sub_up(b.lo(), a.lo());
  const double dh = a.hi() >= b.hi() ? rounding::sub_up(a.hi(), b.hi()) : rounding::sub_up(b.hi(), a.hi());
  return std::max(dl, dh);
}

inline double width(const Interval& a) noexcept { return rounding::sub_up(a.hi(), a.lo()); }

inline double mid(const Interval& a) {
  require_finite(a, "mid");
  const double m = 0.5 * a.lo() + 0.5 * a.hi();
  return std::clamp(m, a.lo(), a.hi());
}

inline double rad(const Interval& a) {
  require_finite(a, "rad");
  return 0.5 * width(a);
}

inline double mag(const Interval& a) noexcept { return std::max(std::fabs(a.lo()), std::fabs(a.hi())); }

struct Geometry {
  double width;
  double mid;
  double rad;
  double mag;
};

inline Geometry geometry(const Interval& a) { return {width(a), mid(a), rad(a), mag(a)}; }

}  // namespace ivl

#endif  // IVL_INTERVAL_HPP
