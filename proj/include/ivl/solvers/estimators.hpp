#ifndef IVL_SOLVERS_ESTIMATORS_HPP
#define IVL_SOLVERS_ESTIMATORS_HPP

// Formal solutions of interval linear systems and the four solution-set
// estimators built on them.
//
//   outer united     formal solution of x = (I - A) x + b         encloses Ξ_uni
//   inner united     proper formal solution of (dual A) x = b     lies inside Ξ_uni
//   inner tolerable  proper formal solution of A x = b            lies inside Ξ_tol
//   outer tolerable  formal solution of x = (I - dual A) x + b    encloses Ξ_tol
//
// The outer estimators need rho(|I - A|) < 1. Formal solutions are computed
// in Kaucher arithmetic, so a candidate is only reported as an estimate after
// it has been checked.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/kinterval.hpp"
#include "ivl/solvers/linear_system.hpp"
#include "ivl/solvers/oracles.hpp"
#include "ivl/solvers/spectral.hpp"

namespace ivl {

struct SolverConfig {
  /// Stop when successive iterates are closer than this in kdist.
  double step_tol = 1e-12;
  /// Largest residual accepted from verify_formal_solution.
  double verify_tol = 1e-9;
  std::size_t max_iter = 10000;
  /// Largest system handed to the formal Gauss-Seidel iteration.
  std::size_t max_dim = 1000;
};

enum class EstimateStatus { Ok, NotVerified, Improper };

constexpr const char* to_string(EstimateStatus s) noexcept {
  switch (s) {
    case EstimateStatus::Ok: return "ok";
    case EstimateStatus::NotVerified: return "NotVerified";
    case EstimateStatus::Improper: return "Improper";
  }
  return "unknown";
}

struct EstimateReport {
  KVector x;
  /// Only a verified report makes a claim about the solution set.
  bool verified = false;
  double residual = 0.0;
  std::size_t iterations = 0;
  /// rho(|C|) for fixed-point estimators, NaN where no contraction is needed.
  double rho_estimate = std::numeric_limits<double>::quiet_NaN();
  EstimateStatus status = EstimateStatus::Ok;
  /// kdist between successive iterates.
  std::vector<double> steps;
};

// ---- fixed-point engine ---------------------------------------------------

inline constexpr double contraction_margin = 1e-10;

/// Iterates x <- C x + d in Kaucher arithmetic until successive iterates are
/// closer than tol. Throws NotContracting unless rho(mag C) < 1 - 1e-10 and
/// NoConvergence after max_iter steps.
inline EstimateReport fixed_point_iterate(const KMatrix& C, const KVector& d, const KVector& x0, double tol,
                                          std::size_t max_iter) {
  if (!C.is_square() || C.rows() != d.size() || d.size() != x0.size() || d.empty()) {
    throw error(errc::dimension_mismatch, "fixed_point_iterate");
  }
  EstimateReport rep;
  rep.rho_estimate = spectral_radius_nonneg(mag(C));
  if (rep.rho_estimate >= 1.0 - contraction_margin) {
    throw error(errc::not_contracting, "rho(|C|) = " + std::to_string(rep.rho_estimate));
  }
  KVector x = x0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    KVector next = kmatvec(C, x) + d;
    const double step = kdist(next, x);
    rep.steps.push_back(step);
    x = std::move(next);
    if (step < tol) {
      rep.iterations = it;
      rep.residual = kdist(kmatvec(C, x) + d, x);
      rep.x = std::move(x);
      return rep;
    }
  }
  throw error(errc::no_convergence, "fixed-point iteration exceeded " + std::to_string(max_iter) + " steps");
}

// ---- formal Gauss-Seidel --------------------------------------------------

struct FormalIterate {
  KVector x;
  std::size_t iterations = 0;
  bool converged = false;
};

namespace detail {

inline FormalIterate formal_gauss_seidel_run(const KMatrix& G, const KVector& h, const SolverConfig& cfg) {
  if (!G.is_square() || G.rows() != h.size() || h.empty()) {
    throw error(errc::dimension_mismatch, "formal_gauss_seidel");
  }
  const std::size_t n = h.size();
  if (n > cfg.max_dim) throw error(errc::invalid_argument, "system larger than max_dim");
  std::vector<KInterval> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = alg_inverse(G(i, i));

  FormalIterate out;
  out.x = h;
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    double step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      KInterval off;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) off = off + G(i, j) * out.x[j];
      const KInterval xi = inv[i] * alg_sub(h[i], off);
      step = std::max(step, kdist(xi, out.x[i]));
      out.x[i] = xi;
    }
    out.iterations = it;
    if (step < cfg.step_tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// Candidate formal solution of G x = h by the coordinate iteration
///   x_i <- inv(G_ii) * (h_i ⊖ sum_{j != i} G_ij x_j)
/// started from x = h. The caller must verify the candidate.
inline KVector formal_gauss_seidel(const KMatrix& G, const KVector& h, const SolverConfig& cfg = {}) {
  FormalIterate run = detail::formal_gauss_seidel_run(G, h, cfg);
  if (!run.converged) throw error(errc::no_convergence, "formal Gauss-Seidel did not settle");
  return std::move(run.x);
}

// ---- verification ---------------------------------------------------------

struct LinearEquation {
  KMatrix G;
  KVector h;
};

/// a x^2 + b x = c, with x^2 the range square.
struct QuadraticEquation {
  KInterval a;
  KInterval b;
  KInterval c;
};

struct FormalCheck {
  bool ok = false;
  /// Largest kdist between the two sides of the equation.
  double residual = 0.0;
};

inline FormalCheck verify_formal_solution(const LinearEquation& eq, const KVector& x, double tol) {
  const double r = kdist(kmatvec(eq.G, x), eq.h);
  return {r <= tol, r};
}

inline FormalCheck verify_formal_solution(const QuadraticEquation& eq, const KInterval& x, double tol) {
  const KInterval lhs = eq.a * int_pow(x, 2) + eq.b * x;
  const double r = kdist(lhs, eq.c);
  return {r <= tol, r};
}

// ---- estimators -----------------------------------------------------------

namespace detail {

inline void require_estimator_input(const ILinearSystem& sys, const char* what) {
  sys.require_square();
  if (!sys.is_proper()) throw error(errc::invalid_argument, std::string(what) + " needs proper A and b");
}

constexpr double unit_roundoff = std::numeric_limits<double>::epsilon();
constexpr int adjust_attempts = 9;

// Width adjustment for attempt k (k = 0 leaves the box unchanged).
inline double adjust_amount(const KInterval& k, int attempt, double floor) {
  if (attempt == 0) return 0.0;
  const double base = std::max(floor, 4 * unit_roundoff * std::max(1.0, mag(k)));
  return base * std::pow(4.0, attempt - 1);
}

// Widens x in the inclusion order until F(x) = C x + d maps it into itself.
// F is inclusion isotone and contracting, so its fixed point then lies in x.
inline std::optional<KVector> enclose_fixed_point(const KMatrix& C, const KVector& d, const KVector& x,
                                                  double floor) {
  for (int attempt = 0; attempt < adjust_attempts; ++attempt) {
    KVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double delta = adjust_amount(x[i], attempt, floor);
      y[i] = KInterval(rounding::sub_down(x[i].lo(), delta), rounding::add_up(x[i].hi(), delta));
    }
    if (kleq(kmatvec(C, y) + d, y)) return y;
  }
  return std::nullopt;
}

// Points checked against the membership oracle: every vertex (up to 2^12 of
// them) and the midpoint.
inline bool box_points_are_members(const ILinearSystem& sys, const KVector& box, SolutionSet which) {
  const std::size_t n = box.size();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = 0.5 * box[i].lo() + 0.5 * box[i].hi();
  if (!member(sys, p, which)) return false;
  if (n > 12) return true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u ? box[i].hi() : box[i].lo();
    if (!member(sys, p, which)) return false;
  }
  return true;
}

// Formal solutions carry rounding drift of a few ulps; shrink the box until
// its vertices and midpoint pass the exact membership test.
inline std::optional<KVector> certify_inner_box(const ILinearSystem& sys, const KVector& x, SolutionSet which) {
  for (int attempt = 0; attempt < adjust_attempts; ++attempt) {
    KVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double half = 0.5 * (x[i].hi() - x[i].lo());
      const double delta = std::min(adjust_amount(x[i], attempt, 0.0), half);
      y[i] = KInterval(x[i].lo() + delta, x[i].hi() - delta);
      if (y[i].is_improper()) y[i] = KInterval::point(0.5 * x[i].lo() + 0.5 * x[i].hi());
    }
    if (box_points_are_members(sys, y, which)) return y;
  }
  return std::nullopt;
}

inline EstimateReport outer_estimate(const ILinearSystem& sys, const KMatrix& C, const SolverConfig& cfg) {
  EstimateReport rep = fixed_point_iterate(C, sys.b, sys.b, cfg.step_tol, cfg.max_iter);
  if (!is_proper(rep.x)) {
    rep.status = EstimateStatus::Improper;
    return rep;
  }
  if (auto box = enclose_fixed_point(C, sys.b, rep.x, cfg.step_tol)) {
    rep.x = std::move(*box);
    rep.verified = rep.residual <= cfg.verify_tol;
  }
  rep.status = rep.verified ? EstimateStatus::Ok : EstimateStatus::NotVerified;
  return rep;
}

inline EstimateReport inner_estimate(const ILinearSystem& sys, const KMatrix& G, SolutionSet which,
                                     const SolverConfig& cfg) {
  EstimateReport rep;
  FormalIterate run;
  try {
    run = formal_gauss_seidel_run(G, sys.b, cfg);
  } catch (const error& e) {
    // Divergent iterates overflow the finite Kaucher endpoints.
    if (e.code() != errc::invalid_argument) throw;
    throw error(errc::no_convergence, "formal Gauss-Seidel diverged");
  }
  rep.x = std::move(run.x);
  rep.iterations = run.iterations;
  rep.residual = verify_formal_solution(LinearEquation{G, sys.b}, rep.x, cfg.verify_tol).residual;
  if (!is_proper(rep.x)) {
    rep.status = EstimateStatus::Improper;
    return rep;
  }
  if (!run.converged || rep.residual > cfg.verify_tol) {
    rep.status = EstimateStatus::NotVerified;
    return rep;
  }
  if (auto box = certify_inner_box(sys, rep.x, which)) {
    rep.x = std::move(*box);
    rep.verified = true;
    rep.status = EstimateStatus::Ok;
  } else {
    rep.status = EstimateStatus::NotVerified;
  }
  return rep;
}

}  // namespace detail

/// Box enclosing the united solution set.
inline EstimateReport outer_united(const ILinearSystem& sys, const SolverConfig& cfg = {}) {
  detail::require_estimator_input(sys, "outer_united");
  return detail::outer_estimate(sys, identity_kmatrix(sys.size()) - sys.A, cfg);
}

/// Box inside the united solution set.
inline EstimateReport inner_united(const ILinearSystem& sys, const SolverConfig& cfg = {}) {
  detail::require_estimator_input(sys, "inner_united");
  return detail::inner_estimate(sys, dual(sys.A), SolutionSet::United, cfg);
}

/// Box inside the tolerable solution set. An improper formal solution means
/// no such box was found.
inline EstimateReport inner_tolerable(const ILinearSystem& sys, const SolverConfig& cfg = {}) {
  detail::require_estimator_input(sys, "inner_tolerable");
  return detail::inner_estimate(sys, sys.A, SolutionSet::Tolerable, cfg);
}

/// Box enclosing the tolerable solution set.
inline EstimateReport outer_tolerable(const ILinearSystem& sys, const SolverConfig& cfg = {}) {
  detail::require_estimator_input(sys, "outer_tolerable");
  return detail::outer_estimate(sys, identity_kmatrix(sys.size()) - dual(sys.A), cfg);
}

}  // namespace ivl

#endif  // IVL_SOLVERS_ESTIMATORS_HPP
