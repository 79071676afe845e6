#ifndef IVL_SOLVERS_PRECONDITION_HPP
#define IVL_SOLVERS_PRECONDITION_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/kinterval.hpp"
#include "ivl/solvers/linear_system.hpp"
#include "ivl/solvers/oracles.hpp"

namespace ivl {

namespace detail {

// Inverse of a real square matrix by Gauss-Jordan elimination with partial
// pivoting. R only has to be an approximate inverse; the enclosure property
// of R A, R b holds for any R.
inline RealMatrix approximate_inverse(const RealMatrix& m) {
  const std::size_t n = m.rows();
  RealMatrix a = m;
  RealMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a(i, j)));
  if (scale == 0.0) throw error(errc::singular_midpoint, "midpoint matrix is zero");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::fabs(a(row, col)) > std::fabs(a(piv, col))) piv = row;
    if (std::fabs(a(piv, col)) <= 1e-14 * scale) throw error(errc::singular_midpoint, "midpoint matrix is singular");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(col, k), a(piv, k));
        std::swap(inv(col, k), inv(piv, k));
      }
    }
    const double p = a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) /= p;
      inv(col, k) /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a(row, col) == 0.0) continue;
      const double f = a(row, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(row, k) -= f * a(col, k);
        inv(row, k) -= f * inv(col, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(inv(i, j))) throw error(errc::singular_midpoint, "midpoint inverse overflowed");
  return inv;
}

}  // namespace detail

/// (R A, R b) with R an approximate inverse of mid(A). Every united-set point
/// of the original system is a united-set point of the result.
inline ILinearSystem precondition_midpoint_inverse(const ILinearSystem& sys) {
  detail::require_proper(sys, "precondition_midpoint_inverse");
  sys.require_square();
  const std::size_t n = sys.size();
  RealMatrix mid(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mid(i, j) = 0.5 * sys.A(i, j).lo() + 0.5 * sys.A(i, j).hi();
  const RealMatrix R = detail::approximate_inverse(mid);

  ILinearSystem out{KMatrix(n, n), KVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      KInterval acc;
      for (std::size_t j = 0; j < n; ++j) acc = acc + KInterval::point(R(i, j)) * sys.A(j, k);
      out.A(i, k) = acc;
    }
    KInterval acc;
    for (std::size_t j = 0; j < n; ++j) acc = acc + KInterval::point(R(i, j)) * sys.b[j];
    out.b[i] = acc;
  }
  return out;
}

}  // namespace ivl

#endif  // IVL_SOLVERS_PRECONDITION_HPP
