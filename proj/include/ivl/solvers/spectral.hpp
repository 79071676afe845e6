#ifndef IVL_SOLVERS_SPECTRAL_HPP
#define IVL_SOLVERS_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/solvers/linear_system.hpp"

namespace ivl {

struct PowerIterationConfig {
  double tol = 1e-12;
  std::size_t max_iter = 100000;
  // Plain steps tried before switching to repeated squaring.
  std::size_t plain_steps = 500;
};

namespace detail {

inline double max_row_sum(const RealMatrix& M) {
  double best = 0.0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < M.cols(); ++j) s += M(i, j);
    best = std::max(best, s);
  }
  return best;
}

// Power iteration on I + M; the shift keeps periodic (imprimitive) matrices
// from oscillating. Returns nothing when the estimate has not settled.
inline std::optional<double> shifted_power_iteration(const RealMatrix& M, double tol, std::size_t steps) {
  const std::size_t n = M.rows();
  std::vector<double> v(n, 1.0), w(n);
  double estimate = 0.0;
  for (std::size_t it = 0; it < steps; ++it) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += M(i, j) * v[j];
      w[i] = s;
      norm = std::max(norm, s);
    }
    const double next = norm - 1.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 0 && std::fabs(next - estimate) < tol) return std::max(next, 0.0);
    estimate = next;
  }
  return std::nullopt;
}

// ||M^(2^k)||^(2^-k) in the row-sum norm: an upper bound for every k that
// converges even for defective or nilpotent M, where plain power iteration
// crawls.
inline std::optional<double> squaring_estimate(const RealMatrix& M, double tol) {
  const std::size_t n = M.rows();
  double norm = max_row_sum(M);
  if (norm == 0.0) return 0.0;
  RealMatrix P = M, Q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P(i, j) /= norm;
  double log_scale = std::log(norm), previous = norm, exponent = 1.0;
  for (int k = 0; k < 80; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += P(i, l) * P(l, j);
        Q(i, j) = s;
      }
    std::swap(P, Q);
    exponent *= 2.0;
    log_scale *= 2.0;
    norm = max_row_sum(P);
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P(i, j) /= norm;
    log_scale += std::log(norm);
    const double estimate = std::exp(log_scale / exponent);
    if (std::fabs(estimate - previous) < tol) return estimate;
    previous = estimate;
  }
  return std::nullopt;
}

}  // namespace detail

inline double spectral_radius_nonneg(const RealMatrix& M, const PowerIterationConfig& cfg = {}) {
  if (!M.is_square() || M.rows() == 0) throw error(errc::dimension_mismatch, "spectral radius needs a square matrix");
  const std::size_t n = M.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(M(i, j) >= 0) || !std::isfinite(M(i, j))) {
        throw error(errc::invalid_argument, "spectral radius needs a finite nonnegative matrix");
      }

  const std::size_t plain = std::min(cfg.plain_steps, cfg.max_iter);
  if (const auto r = detail::shifted_power_iteration(M, cfg.tol, plain)) return *r;
  if (const auto r = detail::squaring_estimate(M, cfg.tol)) return *r;
  if (const auto r = detail::shifted_power_iteration(M, cfg.tol, cfg.max_iter - plain)) return *r;
  throw error(errc::no_convergence, "power iteration did not converge");
}

}  // namespace ivl

#endif  // IVL_SOLVERS_SPECTRAL_HPP
