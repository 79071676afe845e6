#ifndef IVL_SOLVERS_ORACLES_HPP
#define IVL_SOLVERS_ORACLES_HPP

// Definition-level checks on interval linear systems: point membership in
// the united and tolerable solution sets, and Monte-Carlo sampling of the
// united set by solving random point systems.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/interval.hpp"
#include "ivl/solvers/linear_system.hpp"

namespace ivl {

enum class SolutionSet { United, Tolerable };

namespace detail {

inline void require_proper(const ILinearSystem& sys, const char* what) {
  sys.validate();
  if (!sys.is_proper()) throw error(errc::invalid_argument, std::string(what) + " needs proper A and b");
}

// Row i of A x with A interval and x a point; every A_ij occurs once, so the
// interval evaluation has no dependency overestimation.
inline Interval row_product(const KMatrix& A, std::size_t i, std::span<const double> x) {
  Interval acc;
  for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A(i, j).to_interval() * Interval::point(x[j]);
  return acc;
}

}  // namespace detail

/// united:    0 ∈ (A x - b)_i for every row
/// tolerable: (A x)_i ⊆ b_i for every row
inline bool member(const ILinearSystem& sys, std::span<const double> x, SolutionSet which) {
  detail::require_proper(sys, "member");
  if (x.size() != sys.A.cols()) throw error(errc::dimension_mismatch, "point has wrong dimension");
  for (std::size_t i = 0; i < sys.A.rows(); ++i) {
    const Interval ax = detail::row_product(sys.A, i, x);
    const Interval bi = sys.b[i].to_interval();
    const bool ok = which == SolutionSet::United ? contains_zero(ax - bi) : subset(ax, bi);
    if (!ok) return false;
  }
  return true;
}

// ---- sampling -------------------------------------------------------------

namespace detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

// Uniform on [0, 1) from the top 53 bits, identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

// Half the draws hit an endpoint (either one, equally likely) so extreme
// matrices show up; the rest are uniform inside.
inline double draw_from(const KInterval& k, std::mt19937_64& rng) {
  const double lo = std::min(k.lo(), k.hi());
  const double hi = std::max(k.lo(), k.hi());
  if (unit_uniform(rng) < 0.5) return unit_uniform(rng) < 0.5 ? lo : hi;
  return std::clamp(lo + (hi - lo) * unit_uniform(rng), lo, hi);
}

// Gaussian elimination with partial pivoting in extended precision, so the
// rounded solution is (almost always) the nearest double to the exact one.
// Returns false for a numerically singular matrix.
inline bool solve_point_system(std::vector<double> a, std::vector<double> b, std::size_t n,
                               std::vector<double>& out) {
  std::vector<wide_float> m(a.begin(), a.end()), r(b.begin(), b.end());
  wide_float scale = 0;
  for (const auto v : m) scale = std::max<wide_float>(scale, v < 0 ? -v : v);
  if (scale == 0) return false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      const wide_float cand = m[row * n + col] < 0 ? -m[row * n + col] : m[row * n + col];
      const wide_float best = m[piv * n + col] < 0 ? -m[piv * n + col] : m[piv * n + col];
      if (cand > best) piv = row;
    }
    const wide_float p = m[piv * n + col];
    if ((p < 0 ? -p : p) <= scale * static_cast<wide_float>(1e-13)) return false;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[col * n + k], m[piv * n + k]);
      std::swap(r[col], r[piv]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      const wide_float f = m[row * n + col] / p;
      for (std::size_t k = col; k < n; ++k) m[row * n + k] -= f * m[col * n + k];
      r[row] -= f * r[col];
    }
  }
  out.assign(n, 0.0);
  std::vector<wide_float> x(n);
  for (std::size_t i = n; i-- > 0;) {
    wide_float s = r[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i * n + k] * x[k];
    x[i] = s / m[i * n + i];
    out[i] = static_cast<double>(x[i]);
  }
  return true;
}

}  // namespace detail

inline constexpr std::size_t max_sampling_dimension = 6;

/// Solutions of randomly drawn point systems A x = b with A ∈ A, b ∈ b.
/// Deterministic for a given seed; singular draws are redrawn.
inline std::vector<std::vector<double>> sample_united(const ILinearSystem& sys, std::size_t n_samples,
                                                      std::uint64_t seed) {
  detail::require_proper(sys, "sample_united");
  sys.require_square();
  const std::size_t n = sys.size();
  if (n > max_sampling_dimension) throw error(errc::invalid_argument, "sample_united supports n <= 6");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> samples;
  samples.reserve(n_samples);
  const std::size_t max_singular = 10 * n_samples + 100;
  std::size_t singular = 0;
  std::vector<double> a(n * n), b(n), x;
  while (samples.size() < n_samples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = detail::draw_from(sys.A(i, j), rng);
    for (std::size_t i = 0; i < n; ++i) b[i] = detail::draw_from(sys.b[i], rng);
    if (detail::solve_point_system(a, b, n, x)) {
      samples.push_back(x);
    } else if (++singular > max_singular) {
      throw error(errc::too_many_singular_samples, std::to_string(singular) + " singular draws");
    }
  }
  return samples;
}

}  // namespace ivl

#endif  // IVL_SOLVERS_ORACLES_HPP
