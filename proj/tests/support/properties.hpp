#ifndef IVL_TESTS_PROPERTIES_HPP
#define IVL_TESTS_PROPERTIES_HPP

// Randomized property suites. Each returns the number of cases run, the
// number of failures and the first counterexample; both the unit tests and
// the acceptance runner use them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ivl/ivl.hpp"
#include "support/exact.hpp"
#include "support/gen.hpp"

namespace ivl_test {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (failures == 0) first_failure = describe();
    ++failures;
  }
  bool passed() const { return failures == 0 && cases > 0; }
};

inline std::string str(const ivl::Interval& a) { return ivl::to_string(a); }
inline std::string str(const ivl::KInterval& a) { return ivl::to_string(a); }

// ---- Kaucher group --------------------------------------------------------

/// Associativity, commutativity, identity and inverses of Kaucher addition.
inline Outcome kr_group_axioms(std::uint64_t seed, std::size_t n) {
  Outcome o{"kr_group_axioms"};
  Gen g(seed);
  const ivl::KInterval zero;
  for (; o.cases < n; ++o.cases) {
    const auto a = g.kinterval_dyadic(), b = g.kinterval_dyadic(), c = g.kinterval_dyadic();
    const auto ctx = [&] { return str(a) + " " + str(b) + " " + str(c); };
    o.expect((a + b) + c == a + (b + c), ctx);
    o.expect(a + b == b + a, ctx);
    o.expect(a + zero == a, ctx);
    o.expect(a + ivl::opp(a) == zero, ctx);
    o.expect(ivl::alg_sub(a, b) == a + ivl::opp(b), ctx);
  }
  return o;
}

/// a + c = b + c exactly when a = b, and (a + c) ⊖ c = a.
inline Outcome kr_additive_cancellation(std::uint64_t seed, std::size_t n) {
  Outcome o{"kr_additive_cancellation"};
  Gen g(seed);
  for (; o.cases < n; ++o.cases) {
    const auto a = g.kinterval_dyadic(), c = g.kinterval_dyadic();
    // Equal and unequal pairs both need coverage.
    const auto b = g.coin() ? a : g.kinterval_dyadic();
    const auto ctx = [&] { return str(a) + " " + str(b) + " " + str(c); };
    o.expect((a + c == b + c) == (a == b), ctx);
    o.expect(ivl::alg_sub(a + c, c) == a, ctx);
  }
  return o;
}

// ---- dual -----------------------------------------------------------------

/// dual commutes with + - * and division, and swaps meet with join.
inline Outcome dual_automorphism(std::uint64_t seed, std::size_t n) {
  Outcome o{"dual_automorphism"};
  Gen g(seed);
  using ivl::dual;
  for (; o.cases < n; ++o.cases) {
    const auto a = g.kinterval_dyadic(), b = g.kinterval_dyadic();
    const auto ctx = [&] { return str(a) + " " + str(b); };
    o.expect(dual(a + b) == dual(a) + dual(b), ctx);
    o.expect(dual(a - b) == dual(a) - dual(b), ctx);
    o.expect(dual(a * b) == dual(a) * dual(b), ctx);
    o.expect(dual(ivl::meet(a, b)) == ivl::join(dual(a), dual(b)), ctx);
    o.expect(dual(ivl::join(a, b)) == ivl::meet(dual(a), dual(b)), ctx);
    o.expect(dual(dual(a)) == a, ctx);
    // Powers of two keep reciprocals exact.
    const double p = std::ldexp(1.0, static_cast<int>(g.integer(-3, 3)));
    const double r = std::ldexp(1.0, static_cast<int>(g.integer(-3, 3)));
    const double s = g.coin() ? 1.0 : -1.0;
    const ivl::KInterval d(s * p, s * r);
    o.expect(dual(a / d) == dual(a) / dual(d), [&] { return str(a) + " / " + str(d); });
  }
  return o;
}

// ---- proper agreement -----------------------------------------------------

/// On proper operands Kaucher and classical operations give identical
/// (rounded) results.
inline Outcome proper_agreement(std::uint64_t seed, std::size_t n) {
  Outcome o{"proper_agreement"};
  Gen g(seed);
  using ivl::KInterval;
  for (; o.cases < n; ++o.cases) {
    const ivl::Interval a = g.interval(), b = g.interval(), z = g.zero_free();
    const KInterval ka = KInterval::from(a), kb = KInterval::from(b), kz = KInterval::from(z);
    const auto ctx = [&] { return str(a) + " " + str(b) + " " + str(z); };
    o.expect(ka + kb == KInterval::from(a + b), ctx);
    o.expect(ka - kb == KInterval::from(a - b), ctx);
    o.expect(ka * kb == KInterval::from(a * b), ctx);
    o.expect(ka / kz == KInterval::from(a / z), ctx);
    const auto cut = ivl::intersect(a, b);
    const KInterval m = ivl::meet(ka, kb);
    o.expect(cut ? m == KInterval::from(*cut) : m.is_improper(), ctx);
    o.expect(ivl::join(ka, kb) == KInterval::from(ivl::hull(a, b)), ctx);
  }
  return o;
}

// ---- inclusion isotonicity ------------------------------------------------

inline Outcome classical_isotonicity(std::uint64_t seed, std::size_t n) {
  Outcome o{"classical_isotonicity"};
  Gen g(seed);
  using ivl::subset;
  for (; o.cases < n; ++o.cases) {
    const ivl::Interval a = g.interval(), b = g.interval(), z = g.zero_free();
    const ivl::Interval a2 = g.inside(a), b2 = g.inside(b), z2 = g.inside(z);
    const unsigned k = static_cast<unsigned>(g.integer(0, 6));
    const auto ctx = [&] { return str(a2) + "⊆" + str(a) + " " + str(b2) + "⊆" + str(b) + " " + str(z2); };
    o.expect(subset(a2 + b2, a + b), ctx);
    o.expect(subset(a2 - b2, a - b), ctx);
    o.expect(subset(a2 * b2, a * b), ctx);
    o.expect(subset(a2 / z2, a / z), ctx);
    o.expect(subset(ivl::int_pow(a2, k), ivl::int_pow(a, k)), ctx);
    o.expect(subset(ivl::hull(a2, b2), ivl::hull(a, b)), ctx);
    if (const auto small = ivl::intersect(a2, b2)) {
      const auto big = ivl::intersect(a, b);
      o.expect(big && subset(*small, *big), ctx);
    }
  }
  return o;
}

inline Outcome kaucher_isotonicity(std::uint64_t seed, std::size_t n) {
  Outcome o{"kaucher_isotonicity"};
  Gen g(seed);
  using ivl::kleq;
  for (; o.cases < n; ++o.cases) {
    const auto a = g.kinterval(), b = g.kinterval();
    const auto a2 = g.kinside(a), b2 = g.kinside(b);
    const auto ctx = [&] { return str(a2) + "⊆" + str(a) + " " + str(b2) + "⊆" + str(b); };
    o.expect(kleq(a2, a) && kleq(b2, b), ctx);
    o.expect(kleq(a2 + b2, a + b), ctx);
    o.expect(kleq(a2 - b2, a - b), ctx);
    o.expect(kleq(a2 * b2, a * b), ctx);
    o.expect(kleq(ivl::meet(a2, b2), ivl::meet(a, b)), ctx);
    o.expect(kleq(ivl::join(a2, b2), ivl::join(a, b)), ctx);
    o.expect(kleq(ivl::dual(a), ivl::dual(a2)), ctx);
    if (!ivl::contains_zero_pro(b) && !ivl::contains_zero_pro(b2)) o.expect(kleq(a2 / b2, a / b), ctx);
  }
  return o;
}

// ---- metrics --------------------------------------------------------------

inline Outcome metric_axioms(std::uint64_t seed, std::size_t n) {
  Outcome o{"metric_axioms"};
  Gen g(seed);
  for (; o.cases < n; ++o.cases) {
    const auto a = g.interval_dyadic(), b = g.interval_dyadic(), c = g.interval_dyadic();
    const auto ctx = [&] { return str(a) + " " + str(b) + " " + str(c); };
    o.expect(ivl::dist(a, a) == 0.0, ctx);
    o.expect((ivl::dist(a, b) == 0.0) == (a == b), ctx);
    o.expect(ivl::dist(a, b) == ivl::dist(b, a), ctx);
    o.expect(ivl::dist(a, c) <= ivl::dist(a, b) + ivl::dist(b, c), ctx);

    const auto ka = g.kinterval_dyadic(), kb = g.kinterval_dyadic(), kc = g.kinterval_dyadic();
    const auto kctx = [&] { return str(ka) + " " + str(kb) + " " + str(kc); };
    o.expect(ivl::kdist(ka, ka) == 0.0, kctx);
    o.expect((ivl::kdist(ka, kb) == 0.0) == (ka == kb), kctx);
    o.expect(ivl::kdist(ka, kb) == ivl::kdist(kb, ka), kctx);
    o.expect(ivl::kdist(ka, kc) <= ivl::kdist(ka, kb) + ivl::kdist(kb, kc), kctx);
    o.expect(ivl::kdist(ka, kb) >= 0.0, kctx);
    // Proper intervals measure the same under both metrics.
    o.expect(ivl::dist(a, b) == ivl::kdist(ivl::KInterval::from(a), ivl::KInterval::from(b)), ctx);
  }
  return o;
}

/// Nested sequences X0 ⊇ X1 ⊇ ... shrinking onto a point p: the sequence is
/// Cauchy in dist, its intersection is the last term and contains p, and
/// dist to [p,p] is bounded by the width.
inline Outcome nested_intervals(std::uint64_t seed, std::size_t sequences) {
  Outcome o{"nested_intervals"};
  Gen g(seed);
  for (; o.cases < sequences; ++o.cases) {
    const double p = g.uniform(-100.0, 100.0);
    ivl::Interval x = ivl::Interval::make(p - g.uniform(0.5, 50.0), p + g.uniform(0.5, 50.0));
    ivl::Interval running = x;
    const ivl::Interval pt = ivl::Interval::point(p);
    for (int k = 0; k < 200; ++k) {
      const double f = g.uniform(0.05, 0.9), h = g.uniform(0.05, 0.9);
      const ivl::Interval next = ivl::Interval::make(p - (p - x.lo()) * f, p + (x.hi() - p) * h);
      const auto ctx = [&] { return str(x) + " -> " + str(next) + " p=" + std::to_string(p); };
      o.expect(ivl::subset(next, x), ctx);
      o.expect(ivl::dist(x, next) <= ivl::width(x), ctx);
      o.expect(ivl::dist(next, pt) <= ivl::width(next), ctx);
      const auto cut = ivl::intersect(running, next);
      o.expect(cut && *cut == next && ivl::contains(*cut, p), ctx);
      if (cut) running = *cut;
      x = next;
    }
    o.expect(ivl::width(x) < 1e-9 && ivl::contains(x, p), [&] { return "limit " + str(x); });
  }
  return o;
}

// ---- extended division ----------------------------------------------------

namespace detail {

inline bool in_part(const ivl::Interval& part, const Q& v) {
  const bool above = std::isinf(part.lo()) || q(part.lo()) <= v;
  const bool below = std::isinf(part.hi()) || v <= q(part.hi());
  return above && below;
}

inline bool contained_in(const ivl::Interval& part, const ivl::ExtendedDivResult& r) {
  return std::any_of(r.parts().begin(), r.parts().end(), [&](const ivl::Interval& p) { return ivl::subset(part, p); });
}

inline ivl::Interval divisor(Gen& g) {
  const double l = -std::fabs(g.real(10.0)) - 0.0625, h = std::fabs(g.real(10.0)) + 0.0625;
  switch (g.integer(0, 5)) {
    case 0: return ivl::Interval::make(0.0, 0.0);
    case 1: return ivl::Interval::make(0.0, h);
    case 2: return ivl::Interval::make(l, 0.0);
    case 3: return ivl::Interval::make(l, h);
    default: return g.zero_free(10.0);
  }
}

inline ivl::Interval dividend(Gen& g) {
  switch (g.integer(0, 5)) {
    case 0: return ivl::Interval::make(0.0, 0.0);
    case 1: return ivl::Interval::make(0.0, std::fabs(g.real(10.0)) + 1.0);
    case 2: return ivl::Interval::make(-std::fabs(g.real(10.0)) - 1.0, 0.0);
    default: return g.interval(10.0);
  }
}

}  // namespace detail

/// Every quotient x / y with x ∈ a, y ∈ b, y != 0 lies in ediv(a, b,
/// SetBased); Containment results contain SetBased ones.
inline Outcome ediv_soundness(std::uint64_t seed, std::size_t n) {
  Outcome o{"ediv_soundness"};
  Gen g(seed);
  for (; o.cases < n; ++o.cases) {
    const ivl::Interval a = detail::dividend(g), b = detail::divisor(g);
    const auto set = ivl::ediv(a, b, ivl::ZeroSemantics::SetBased);
    const auto cont = ivl::ediv(a, b, ivl::ZeroSemantics::Containment);
    const auto ctx = [&] { return str(a) + " / " + str(b) + " = " + ivl::to_string(set); };
    for (const auto& part : set.parts()) o.expect(detail::contained_in(part, cont), ctx);
    for (int k = 0; k < 20; ++k) {
      const double x = g.point_in(a), y = g.point_in(b);
      if (y == 0.0) continue;
      const Q v = q(x) / q(y);
      o.expect(std::any_of(set.parts().begin(), set.parts().end(),
                           [&](const ivl::Interval& p) { return detail::in_part(p, v); }),
               [&] { return ctx() + " misses " + std::to_string(x) + "/" + std::to_string(y); });
    }
  }
  return o;
}

// ---- Newton ---------------------------------------------------------------

namespace detail {

inline std::string exact_literal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.40g", std::fabs(x));
  return buf;
}

inline std::string linear_factor(double r) {
  return r < 0 ? "(x+" + exact_literal(r) + ")" : "(x-" + exact_literal(r) + ")";
}

// Polynomial with roots r, either factored or expanded; every coefficient is
// exactly representable and printed exactly.
inline std::string cubic_text(const std::vector<double>& r, double scale, bool expanded) {
  const std::string s = (scale < 0 ? "(-" : "(") + exact_literal(scale) + ")";
  if (!expanded) return s + "*" + linear_factor(r[0]) + "*" + linear_factor(r[1]) + "*" + linear_factor(r[2]);
  const double c2 = -(r[0] + r[1] + r[2]);
  const double c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
  const double c0 = -(r[0] * r[1] * r[2]);
  const auto term = [](double c, const std::string& mono) {
    return std::string(c < 0 ? " - " : " + ") + exact_literal(c) + mono;
  };
  return s + "*(x^3" + term(c2, "*x^2") + term(c1, "*x") + term(c0, "") + ")";
}

}  // namespace detail

/// Random cubics with known roots (multiples of 1/64, pairwise at least 1/16
/// apart): every root in X0 lies in a returned box, and a UniqueZeroProven
/// box contains exactly one root.
inline Outcome newton_soundness(std::uint64_t seed, std::size_t n) {
  Outcome o{"newton_soundness"};
  Gen g(seed);
  for (; o.cases < n; ++o.cases) {
    std::vector<double> r;
    while (r.size() < 3) {
      const double c = static_cast<double>(g.integer(-256, 256)) / 64.0;
      if (std::all_of(r.begin(), r.end(), [c](double x) { return std::fabs(x - c) >= 1.0 / 16; })) r.push_back(c);
    }
    std::sort(r.begin(), r.end());
    const double scale = std::ldexp(g.coin() ? 1.0 : -1.0, static_cast<int>(g.integer(-2, 2)));
    const std::string text = detail::cubic_text(r, scale, g.coin());
    const double lo = g.uniform(-6.0, r[0] + 0.5), hi = g.uniform(r[2] - 0.5, 6.0);
    const ivl::Interval X0 = ivl::Interval::make(std::min(lo, hi), std::max(lo, hi));
    const auto ctx = [&] { return text + " on " + str(X0); };
    ivl::NewtonResult res;
    try {
      res = ivl::newton_solve(ivl::parse_expr(text), X0);
    } catch (const ivl::error& e) {
      o.expect(false, [&] { return ctx() + ": " + e.what(); });
      continue;
    }
    for (const double root : r) {
      if (!ivl::contains(X0, root)) continue;
      o.expect(std::any_of(res.boxes.begin(), res.boxes.end(),
                           [root](const ivl::RootBox& b) { return ivl::contains(b.box, root); }),
               [&] { return ctx() + " lost root " + std::to_string(root); });
    }
    for (const auto& b : res.boxes) {
      if (b.status != ivl::RootStatus::UniqueZeroProven) continue;
      const auto k = std::count_if(r.begin(), r.end(), [&](double root) { return ivl::contains(b.box, root); });
      o.expect(k == 1, [&] { return ctx() + " box " + str(b.box) + " holds " + std::to_string(k) + " roots"; });
    }
  }
  return o;
}

// ---- linear systems -------------------------------------------------------

/// System I - C + perturbation with row sums of |C| <= 0.8, so
/// rho(|I - A|) < 0.9.
inline ivl::ILinearSystem random_contracting_system(Gen& g, std::size_t n) {
  ivl::ILinearSystem sys{ivl::KMatrix(n, n), ivl::KVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double budget = 0.8;
    for (std::size_t j = 0; j < n; ++j) {
      const double share = budget * g.uniform(0.0, 1.0) / static_cast<double>(n - j);
      budget -= share;
      const double r = share * g.uniform(0.0, 1.0);
      const double c = (g.coin() ? 1.0 : -1.0) * (share - r);
      const double base = i == j ? 1.0 : 0.0;
      sys.A(i, j) = ivl::KInterval(base + c - r, base + c + r);
    }
    const double m = g.uniform(-5.0, 5.0), w = g.uniform(0.0, 2.0);
    sys.b[i] = ivl::KInterval(m - w, m + w);
  }
  return sys;
}

namespace detail {

inline bool box_contains(const ivl::KVector& box, const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(box[i].lo() <= x[i] && x[i] <= box[i].hi())) return false;
  return true;
}

inline bool box_points_pass(const ivl::ILinearSystem& sys, const ivl::KVector& box, ivl::SolutionSet which) {
  const std::size_t n = box.size();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = 0.5 * box[i].lo() + 0.5 * box[i].hi();
  if (!ivl::member(sys, p, which)) return false;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u ? box[i].hi() : box[i].lo();
    if (!ivl::member(sys, p, which)) return false;
  }
  return true;
}

}  // namespace detail

/// Samples, membership, outer/inner estimators, the Gauss-Seidel step and
/// preconditioning agree on random contracting systems of size 1 to 4.
inline Outcome oracle_consistency(std::uint64_t seed, std::size_t n_systems, std::size_t samples_per_system = 200) {
  Outcome o{"oracle_consistency"};
  Gen g(seed);
  using ivl::SolutionSet;
  for (; o.cases < n_systems; ++o.cases) {
    const std::size_t n = 1 + o.cases % 4;
    const ivl::ILinearSystem sys = random_contracting_system(g, n);
    const auto ctx = [&](const char* what) {
      return [&, what] { return std::string(what) + " in system #" + std::to_string(o.cases); };
    };
    const auto samples = ivl::sample_united(sys, samples_per_system, seed + o.cases);
    const auto ou = ivl::outer_united(sys);
    const auto ot = ivl::outer_tolerable(sys);
    const auto iu = ivl::inner_united(sys);
    const auto it = ivl::inner_tolerable(sys);
    const auto pre = ivl::precondition_midpoint_inverse(sys);

    o.expect(ou.verified && ou.status == ivl::EstimateStatus::Ok, ctx("outer_united not verified"));
    std::vector<ivl::MaybeInterval> box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = ou.x[i].to_interval();
    const auto gs = ivl::gauss_seidel_step(sys, box);

    for (const auto& x : samples) {
      o.expect(ivl::member(sys, x, SolutionSet::United), ctx("sample fails member(united)"));
      o.expect(detail::box_contains(ou.x, x), ctx("sample outside outer_united"));
      o.expect(ivl::member(pre, x, SolutionSet::United), ctx("sample lost by preconditioning"));
      bool kept = true;
      for (std::size_t i = 0; i < n; ++i) kept = kept && gs[i] && ivl::contains(*gs[i], x[i]);
      o.expect(kept, ctx("sample lost by gauss_seidel_step"));
    }
    if (iu.verified) {
      o.expect(detail::box_points_pass(sys, iu.x, SolutionSet::United), ctx("inner_united point outside"));
      o.expect(ivl::kleq(iu.x, ou.x), ctx("inner_united not inside outer_united"));
    }
    if (it.verified) {
      o.expect(detail::box_points_pass(sys, it.x, SolutionSet::Tolerable), ctx("inner_tolerable point outside"));
      o.expect(ot.status == ivl::EstimateStatus::Ok && ivl::kleq(it.x, ot.x),
               ctx("inner_tolerable not inside outer_tolerable"));
    }
  }
  return o;
}

/// All suites of the property acceptance criterion with their default sizes.
inline std::vector<Outcome> all_property_suites(std::uint64_t seed) {
  return {kr_group_axioms(seed, 10000),
          dual_automorphism(seed + 1, 10000),
          proper_agreement(seed + 2, 10000),
          classical_isotonicity(seed + 3, 10000),
          kaucher_isotonicity(seed + 4, 10000),
          metric_axioms(seed + 5, 10000),
          nested_intervals(seed + 6, 1000),
          ediv_soundness(seed + 7, 10000),
          newton_soundness(seed + 8, 200),
          oracle_consistency(seed + 9, 100)};
}

}  // namespace ivl_test

#endif
