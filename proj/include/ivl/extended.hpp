#ifndef IVL_EXTENDED_HPP
#define IVL_EXTENDED_HPP

// Division by intervals that contain zero.
//
// The result is the topological closure of {x / y : x ∈ a, y ∈ b, y admissible}
// and may be empty, one interval, two disjoint semi-infinite intervals, or the
// whole extended line. Two semantics decide what happens at y = 0:
//
//   Containment  the quotient must contain 0/0, so 0 ∈ a and 0 ∈ b yields the
//                whole line:      [0,1] / [0,1]  = [-inf, inf]
//   SetBased     the divisor value 0 is excluded, as if the divisor were open
//                at zero:         [0,1] / ]0,1]  = [0, inf]

#include <algorithm>
#include <cmath>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/interval.hpp"

namespace ivl {

enum class ZeroSemantics { Containment, SetBased };

class ExtendedDivResult {
 public:
  enum class Kind { Empty, Single, Pair, WholeLine };

  static ExtendedDivResult empty() noexcept { return ExtendedDivResult(Kind::Empty, {}); }
  static ExtendedDivResult whole_line() noexcept {
    return ExtendedDivResult(Kind::WholeLine, {Interval::entire()});
  }

  /// [-inf, inf] is canonicalized to WholeLine.
  static ExtendedDivResult single(const Interval& x) {
    if (x == Interval::entire()) return whole_line();
    return ExtendedDivResult(Kind::Single, {x});
  }

  /// Two components, merged into one when they overlap or touch.
  static ExtendedDivResult pair(Interval u, Interval v) {
    if (v.lo() < u.lo()) std::swap(u, v);
    if (u.hi() >= v.lo()) return single(hull(u, v));
    return ExtendedDivResult(Kind::Pair, {u, v});
  }

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }

  /// Components in increasing order; WholeLine reports [-inf, inf].
  const std::vector<Interval>& parts() const noexcept { return parts_; }

  bool contains(double x) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(),
                       [x](const Interval& p) { return ivl::contains(p, x); });
  }

  friend bool operator==(const ExtendedDivResult&, const ExtendedDivResult&) = default;

 private:
  ExtendedDivResult(Kind kind, std::vector<Interval> parts) : kind_(kind), parts_(std::move(parts)) {}

  Kind kind_;
  std::vector<Interval> parts_;
};

namespace detail {

// Closure of a / (0, h] for h > 0 (h may be +inf) and a != [0, 0].
inline Interval divide_by_positive_side(const Interval& a, double h) {
  constexpr double inf = rounding::inf;
  if (a.lo() >= 0) return Interval::make(rounding::div_down(a.lo(), h), inf);
  if (a.hi() <= 0) return Interval::make(-inf, rounding::div_up(a.hi(), h));
  return Interval::entire();
}

}  // namespace detail

inline ExtendedDivResult ediv(const Interval& a, const Interval& b, ZeroSemantics sem) {
  if (!contains_zero(b)) return ExtendedDivResult::single(a / b);

  const bool zero_num = contains_zero(a);
  if (sem == ZeroSemantics::Containment && zero_num) return ExtendedDivResult::whole_line();
  if (b.lo() == 0 && b.hi() == 0) return ExtendedDivResult::empty();
  if (a.lo() == 0 && a.hi() == 0) return ExtendedDivResult::single(Interval());

  std::vector<Interval> pieces;
  if (b.hi() > 0) pieces.push_back(detail::divide_by_positive_side(a, b.hi()));
  if (b.lo() < 0) pieces.push_back(-detail::divide_by_positive_side(a, -b.lo()));

  if (pieces.size() == 1) return ExtendedDivResult::single(pieces.front());
  return ExtendedDivResult::pair(pieces[0], pieces[1]);
}

// ---- signed-zero endpoint encoding ----------------------------------------

/// A closed interval plus advisory openness at a zero endpoint.
struct SignedZeroInterval {
  Interval interval;
  bool lo_open_at_zero = false;
  bool hi_open_at_zero = false;

  bool is_open_at_zero() const noexcept { return lo_open_at_zero || hi_open_at_zero; }
};

/// Reads the IEEE signed zero of an endpoint pair:
///   (a, +0) is [a, 0]     (a, -0) is [a, 0[     for a < 0
///   (-0, b) is [0, b]     (+0, b) is ]0, b]     for b > 0
/// Pairs without a zero endpoint are ordinary closed intervals.
inline SignedZeroInterval interpret_signed_zero(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw error(errc::invalid_encoding, "NaN endpoint");
  SignedZeroInterval out{};
  if (hi == 0) {
    if (!(lo < 0)) throw error(errc::invalid_encoding, "zero upper endpoint needs lo < 0");
    out.interval = Interval::make(lo, 0.0);
    out.hi_open_at_zero = std::signbit(hi);
    return out;
  }
  if (lo == 0) {
    if (!(hi > 0)) throw error(errc::invalid_encoding, "zero lower endpoint needs hi > 0");
    out.interval = Interval::make(0.0, hi);
    out.lo_open_at_zero = !std::signbit(lo);
    return out;
  }
  if (lo > hi) throw error(errc::invalid_encoding, "reversed endpoints");
  out.interval = Interval::make(lo, hi);
  return out;
}

/// Division whose zero semantics follow the divisor's encoding: a divisor
/// open at zero divides set-based, a closed one by containment.
inline ExtendedDivResult ediv(const Interval& a, const SignedZeroInterval& b) {
  return ediv(a, b.interval, b.is_open_at_zero() ? ZeroSemantics::SetBased : ZeroSemantics::Containment);
}

}  // namespace ivl

#endif  // IVL_EXTENDED_HPP
