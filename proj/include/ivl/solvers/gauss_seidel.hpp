#ifndef IVL_SOLVERS_GAUSS_SEIDEL_HPP
#define IVL_SOLVERS_GAUSS_SEIDEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/extended.hpp"
#include "ivl/interval.hpp"
#include "ivl/solvers/linear_system.hpp"
#include "ivl/solvers/oracles.hpp"

namespace ivl {

/// One interval Gauss-Seidel sweep
///   X_i <- X_i ∩ (b_i - sum_{j != i} A_ij X_j) / A_ii
/// with set-based extended division, so a zero-containing A_ii may split or
/// empty a coordinate. If any coordinate becomes empty the whole box holds no
/// united-set point and every coordinate is returned empty.
inline std::vector<MaybeInterval> gauss_seidel_step(const ILinearSystem& sys, const std::vector<MaybeInterval>& X) {
  detail::require_proper(sys, "gauss_seidel_step");
  sys.require_square();
  const std::size_t n = sys.size();
  if (X.size() != n) throw error(errc::dimension_mismatch, "box has wrong dimension");

  std::vector<MaybeInterval> out = X;
  const auto all_empty = [n] { return std::vector<MaybeInterval>(n); };
  for (const auto& xi : out)
    if (!xi) return all_empty();

  for (std::size_t i = 0; i < n; ++i) {
    Interval num = sys.b[i].to_interval();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) num = num - sys.A(i, j).to_interval() * *out[j];
    const Interval aii = sys.A(i, i).to_interval();
    // 0 ∈ num and 0 ∈ A_ii: every x_i solves the row, nothing to prune.
    if (contains_zero(num) && contains_zero(aii)) continue;

    const ExtendedDivResult q = ediv(num, aii, ZeroSemantics::SetBased);
    MaybeInterval next;
    for (const Interval& part : q.parts()) {
      if (const auto cut = intersect(*out[i], part)) next = next ? hull(*next, *cut) : *cut;
    }
    if (!next) return all_empty();
    out[i] = next;
  }
  return out;
}

}  // namespace ivl

#endif  // IVL_SOLVERS_GAUSS_SEIDEL_HPP
