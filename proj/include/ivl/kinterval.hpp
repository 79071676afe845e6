#ifndef IVL_KINTERVAL_HPP
#define IVL_KINTERVAL_HPP

// Kaucher complete interval arithmetic over proper and improper intervals.
//
// A KInterval is any ordered pair of finite endpoints; [lo, hi] with lo > hi
// is improper. Addition forms an abelian group (every element has an
// opposite), zero-free intervals have algebraic inverses, and the inclusion
// order makes the set a lattice with meet [max lo, min hi] and join
// [min lo, max hi]. There is no empty element.
//
// Rounding is outward in the inclusion order: lo toward -inf and hi toward
// +inf, whatever the properness of the result.

#include <algorithm>
#include <cmath>

#include "ivl/error.hpp"
#include "ivl/interval.hpp"
#include "ivl/rounding.hpp"

namespace ivl {

class KInterval {
 public:
  constexpr KInterval() noexcept = default;

  /// Both endpoints must be finite; their order is unconstrained.
  KInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw error(errc::invalid_argument, "KInterval endpoints must be finite");
    }
  }

  static KInterval point(double x) { return {x, x}; }

  /// Embeds a finite classical interval.
  static KInterval from(const Interval& a) {
    require_finite(a, "KInterval::from");
    return {a.lo(), a.hi()};
  }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }

  constexpr bool is_proper() const noexcept { return lo_ <= hi_; }
  constexpr bool is_improper() const noexcept { return lo_ > hi_; }

  /// Classical interval for a proper KInterval; throws ReversedEndpoints
  /// otherwise.
  Interval to_interval() const { return Interval::make(lo_, hi_); }

  friend constexpr bool operator==(const KInterval&, const KInterval&) noexcept = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// ---- sign classes ---------------------------------------------------------

/// Case split behind Kaucher multiplication. Checked in the order P, NegP,
/// Z, DualZ, so [0, 0] is P.
enum class SignClass { P, NegP, Z, DualZ };

constexpr SignClass sign_class(const KInterval& k) noexcept {
  if (k.lo() >= 0 && k.hi() >= 0) return SignClass::P;
  if (k.lo() <= 0 && k.hi() <= 0) return SignClass::NegP;
  if (k.lo() < 0 && k.hi() > 0) return SignClass::Z;
  return SignClass::DualZ;
}

// ---- unary maps -----------------------------------------------------------

/// [a, b] -> [b, a]
inline KInterval dual(const KInterval& k) noexcept { return {k.hi(), k.lo()}; }

/// Proper projection [min, max].
inline KInterval pro(const KInterval& k) noexcept {
  return {std::min(k.lo(), k.hi()), std::max(k.lo(), k.hi())};
}

/// Additive opposite: k + opp(k) = [0, 0].
inline KInterval opp(const KInterval& k) noexcept { return {-k.lo(), -k.hi()}; }

inline KInterval operator-(const KInterval& k) noexcept { return {-k.hi(), -k.lo()}; }

inline double mag(const KInterval& k) noexcept { return std::max(std::fabs(k.lo()), std::fabs(k.hi())); }

inline bool contains_zero_pro(const KInterval& k) noexcept {
  return std::min(k.lo(), k.hi()) <= 0 && 0 <= std::max(k.lo(), k.hi());
}

// ---- addition group -------------------------------------------------------

namespace detail {

inline KInterval checked(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw error(errc::invalid_argument, "Kaucher operation overflowed");
  }
  return {lo, hi};
}

}  // namespace detail

inline KInterval operator+(const KInterval& a, const KInterval& b) {
  return detail::checked(rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi()));
}

/// Algebraic (Hukuhara-type) difference: the unique c with b + c = a.
inline KInterval alg_sub(const KInterval& a, const KInterval& b) {
  return detail::checked(rounding::sub_down(a.lo(), b.lo()), rounding::sub_up(a.hi(), b.hi()));
}

/// a + opp(dual(b)); coincides with classical subtraction on proper operands.
inline KInterval operator-(const KInterval& a, const KInterval& b) {
  return detail::checked(rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo()));
}

// ---- multiplication -------------------------------------------------------

// Sixteen-case table indexed by the sign classes of both operands. With
// a = [a1, a2] and b = [b1, b2] the endpoint products are
//
//   b in P:     a in P     [a1b1, a2b2]     a in Z     [a1b2, a2b2]
//               a in -P    [a1b2, a2b1]     a in dZ    [a1b1, a2b1]
//   b in Z:     a in P     [a2b1, a2b2]     a in Z     [min(a1b2, a2b1), max(a1b1, a2b2)]
//               a in -P    [a1b2, a1b1]     a in dZ    [0, 0]
//   b in -P:    a in P     [a2b1, a1b2]     a in Z     [a2b1, a1b1]
//               a in -P    [a2b2, a1b1]     a in dZ    [a2b2, a1b2]
//   b in dZ:    a in P     [a1b1, a1b2]     a in Z     [0, 0]
//               a in -P    [a2b2, a2b1]     a in dZ    [max(a1b1, a2b2), min(a1b2, a2b1)]
inline KInterval operator*(const KInterval& a, const KInterval& b) {
  using rounding::mul_down;
  using rounding::mul_up;
  const double a1 = a.lo(), a2 = a.hi(), b1 = b.lo(), b2 = b.hi();
  const auto pair = [](double lo, double hi) { return detail::checked(lo, hi); };

  switch (sign_class(b)) {
    case SignClass::P:
      switch (sign_class(a)) {
        case SignClass::P: return pair(mul_down(a1, b1), mul_up(a2, b2));
        case SignClass::Z: return pair(mul_down(a1, b2), mul_up(a2, b2));
        case SignClass::NegP: return pair(mul_down(a1, b2), mul_up(a2, b1));
        case SignClass::DualZ: return pair(mul_down(a1, b1), mul_up(a2, b1));
      }
      break;
    case SignClass::Z:
      switch (sign_class(a)) {
        case SignClass::P: return pair(mul_down(a2, b1), mul_up(a2, b2));
        case SignClass::Z:
          return pair(std::min(mul_down(a1, b2), mul_down(a2, b1)),
                      std::max(mul_up(a1, b1), mul_up(a2, b2)));
        case SignClass::NegP: return pair(mul_down(a1, b2), mul_up(a1, b1));
        case SignClass::DualZ: return {0.0, 0.0};
      }
      break;
    case SignClass::NegP:
      switch (sign_class(a)) {
        case SignClass::P: return pair(mul_down(a2, b1), mul_up(a1, b2));
        case SignClass::Z: return pair(mul_down(a2, b1), mul_up(a1, b1));
        case SignClass::NegP: return pair(mul_down(a2, b2), mul_up(a1, b1));
        case SignClass::DualZ: return pair(mul_down(a2, b2), mul_up(a1, b2));
      }
      break;
    case SignClass::DualZ:
      switch (sign_class(a)) {
        case SignClass::P: return pair(mul_down(a1, b1), mul_up(a1, b2));
        case SignClass::Z: return {0.0, 0.0};
        case SignClass::NegP: return pair(mul_down(a2, b2), mul_up(a2, b1));
        case SignClass::DualZ:
          return pair(std::max(mul_down(a1, b1), mul_down(a2, b2)),
                      std::min(mul_up(a1, b2), mul_up(a2, b1)));
      }
      break;
  }
  return {0.0, 0.0};  // unreachable
}

// ---- division -------------------------------------------------------------

namespace detail {

inline void require_zero_free(const KInterval& b) {
  if (contains_zero_pro(b)) throw error(errc::zero_in_pro_divisor, "0 in pro(divisor)");
}

}  // namespace detail

/// [1/hi, 1/lo], extending the classical reciprocal.
inline KInterval reciprocal(const KInterval& b) {
  detail::require_zero_free(b);
  return detail::checked(rounding::div_down(1.0, b.hi()), rounding::div_up(1.0, b.lo()));
}

/// [1/lo, 1/hi], the unique c with b * c = [1, 1].
inline KInterval alg_inverse(const KInterval& b) {
  detail::require_zero_free(b);
  return detail::checked(rounding::div_down(1.0, b.lo()), rounding::div_up(1.0, b.hi()));
}

/// a * reciprocal(b), so proper operands divide as in classical arithmetic.
inline KInterval operator/(const KInterval& a, const KInterval& b) { return a * reciprocal(b); }

// ---- lattice and metric ---------------------------------------------------

/// Greatest lower bound in the inclusion order; improper when a and b are
/// disjoint.
inline KInterval meet(const KInterval& a, const KInterval& b) noexcept {
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

inline KInterval join(const KInterval& a, const KInterval& b) noexcept {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

/// Inclusion a ⊆ b, for proper and improper operands alike.
constexpr bool kleq(const KInterval& a, const KInterval& b) noexcept {
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

inline double kdist(const KInterval& a, const KInterval& b) noexcept {
  const auto gap = [](double x, double y) {
    return x >= y ? rounding::sub_up(x, y) : rounding::sub_up(y, x);
  };
  return std::max(gap(a.lo(), b.lo()), gap(a.hi(), b.hi()));
}

/// Range power of a proper operand; improper operands are Unsupported.
inline KInterval int_pow(const KInterval& k, unsigned n) {
  if (k.is_improper()) throw error(errc::unsupported, "int_pow of an improper interval");
  const Interval r = int_pow(k.to_interval(), n);
  return detail::checked(r.lo(), r.hi());
}

}  // namespace ivl

#endif  // IVL_KINTERVAL_HPP
