#ifndef IVL_SOLVERS_NEWTON_HPP
#define IVL_SOLVERS_NEWTON_HPP

// Interval Newton method on one variable:
//   N(X, x~) = x~ - f(x~) / f'(X),   X <- X ∩ N(X, x~)
// with set-based extended division, so a derivative enclosure through zero
// splits X into two boxes instead of stalling.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/expr.hpp"
#include "ivl/extended.hpp"
#include "ivl/interval.hpp"

namespace ivl {

struct NewtonConfig {
  /// Boxes narrower than this are reported.
  double tol_width = 1e-10;
  /// Total number of box visits.
  std::size_t max_iter = 10000;
  /// Upper bound on pending plus reported boxes.
  std::size_t max_boxes = 10000;
};

enum class RootStatus { UniqueZeroProven, ZeroExistsProven, Undecided };

constexpr const char* to_string(RootStatus s) noexcept {
  switch (s) {
    case RootStatus::UniqueZeroProven: return "UniqueZeroProven";
    case RootStatus::ZeroExistsProven: return "ZeroExistsProven";
    case RootStatus::Undecided: return "Undecided";
  }
  return "unknown";
}

struct RootBox {
  Interval box;
  RootStatus status = RootStatus::Undecided;
};

struct NewtonResult {
  /// Sorted by lower endpoint. Every zero of f in X0 lies in some box.
  std::vector<RootBox> boxes;
  std::size_t iterations = 0;
};

namespace detail {

struct NewtonWork {
  Interval box;
  bool unique = false;
  bool exists = false;
};

inline bool is_zero_in_divisor(const error& e) noexcept { return e.code() == errc::zero_in_divisor; }

// Interval evaluation, or nothing when f has a pole candidate in x.
inline MaybeInterval try_eval(const Expr& f, const Interval& x) {
  try {
    return eval_interval(f, x);
  } catch (const error& e) {
    if (!is_zero_in_divisor(e)) throw;
    return std::nullopt;
  }
}

inline std::optional<AdPair> try_eval_ad(const Expr& f, const Interval& x) {
  try {
    return eval_ad(f, x);
  } catch (const error& e) {
    if (!is_zero_in_divisor(e)) throw;
    return std::nullopt;
  }
}

inline RootStatus status_of(const NewtonWork& w) noexcept {
  if (w.unique) return RootStatus::UniqueZeroProven;
  if (w.exists) return RootStatus::ZeroExistsProven;
  return RootStatus::Undecided;
}

}  // namespace detail

inline NewtonResult newton_solve(const Expr& f, const Interval& X0, const NewtonConfig& cfg = {}) {
  require_finite(X0, "newton_solve needs a finite starting box");
  if (!(cfg.tol_width > 0)) throw error(errc::invalid_argument, "tol_width must be positive");

  NewtonResult result;
  std::vector<detail::NewtonWork> stack{{X0}};

  const auto finalize = [&](const detail::NewtonWork& w) { result.boxes.push_back({w.box, detail::status_of(w)}); };
  const auto push = [&](detail::NewtonWork w) {
    if (stack.size() + result.boxes.size() >= cfg.max_boxes) {
      throw error(errc::budget_exceeded, "more than " + std::to_string(cfg.max_boxes) + " boxes");
    }
    stack.push_back(w);
  };
  // Halves lose the certificates of their parent.
  const auto bisect = [&](const Interval& X) {
    const double m = mid(X);
    if (!(X.lo() < m && m < X.hi())) {
      finalize({X});
      return;
    }
    push({Interval::make(m, X.hi())});
    push({Interval::make(X.lo(), m)});
  };

  while (!stack.empty()) {
    const detail::NewtonWork work = stack.back();
    stack.pop_back();
    if (++result.iterations > cfg.max_iter) {
      throw error(errc::budget_exceeded, "more than " + std::to_string(cfg.max_iter) + " iterations");
    }
    const Interval& X = work.box;
    if (width(X) < cfg.tol_width) {
      finalize(work);
      continue;
    }

    // Range exclusion.
    if (const auto fx = detail::try_eval(f, X); fx && !contains_zero(*fx)) continue;

    const auto ad = detail::try_eval_ad(f, X);
    if (!ad) {
      bisect(X);
      continue;
    }
    const Interval& dfx = ad->deriv;

    std::optional<double> xt;
    MaybeInterval fxt;
    for (const double cand : {mid(X), X.lo() + (X.hi() - X.lo()) / 3.0}) {
      if ((fxt = detail::try_eval(f, Interval::point(cand)))) {
        xt = cand;
        break;
      }
    }
    if (!xt || (contains_zero(*fxt) && contains_zero(dfx))) {
      bisect(X);
      continue;
    }

    const ExtendedDivResult q = ediv(*fxt, dfx, ZeroSemantics::SetBased);
    if (q.is_empty()) {
      bisect(X);
      continue;
    }
    std::vector<Interval> pieces;
    std::vector<Interval> newton_image;
    for (const Interval& part : q.parts()) {
      const Interval n = Interval::point(*xt) - part;
      newton_image.push_back(n);
      if (const auto cut = intersect(X, n)) pieces.push_back(*cut);
    }
    if (pieces.empty()) continue;

    if (pieces.size() == 2) {
      push({pieces[1]});
      push({pieces[0]});
      continue;
    }

    detail::NewtonWork next{pieces.front(), work.unique, work.exists};
    if (newton_image.size() == 1) {
      const Interval& n = newton_image.front();
      if (!contains_zero(dfx) && interior_subset(n, X)) next.unique = true;
      if (subset(n, X)) next.exists = true;
    }
    if (width(next.box) > 0.9 * width(X)) {
      if (width(next.box) < cfg.tol_width) {
        finalize(next);
      } else {
        bisect(next.box);
      }
      continue;
    }
    push(next);
  }

  std::sort(result.boxes.begin(), result.boxes.end(),
            [](const RootBox& a, const RootBox& b) { return a.box.lo() < b.box.lo(); });
  return result;
}

}  // namespace ivl

#endif  // IVL_SOLVERS_NEWTON_HPP
