#include <gtest/gtest.h>

#include "ivl/interval.hpp"
#include "ivl/io/text.hpp"
#include "support/exact.hpp"
#include "support/gen.hpp"

using ivl::Interval;
using ivl::errc;

namespace {

Interval I(double lo, double hi) { return Interval::make(lo, hi); }
constexpr double inf = ivl::rounding::inf;

errc code_of(const auto& f) {
  try {
    f();
  } catch (const ivl::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::invalid_argument;
}

}  // namespace

TEST(Interval, Construction) {
  EXPECT_EQ(I(1, 2).lo(), 1.0);
  EXPECT_EQ(I(1, 2).hi(), 2.0);
  EXPECT_EQ(I(-inf, 0).lo(), -inf);
  EXPECT_EQ(code_of([] { I(2, 1); }), errc::reversed_endpoints);
  EXPECT_EQ(code_of([] { I(inf, inf); }), errc::invalid_argument);
  EXPECT_EQ(code_of([] { I(-inf, -inf); }), errc::invalid_argument);
  EXPECT_EQ(code_of([] { I(std::nan(""), 1); }), errc::invalid_argument);
  EXPECT_EQ(Interval(), I(0, 0));
  EXPECT_EQ(Interval::entire(), I(-inf, inf));
}

TEST(Interval, AddSub) {
  EXPECT_EQ(I(1, 2) + I(3, 4), I(4, 6));
  EXPECT_EQ(I(1, 2) - I(1, 2), I(-1, 1));
  EXPECT_EQ(I(0, 1) + I(-inf, 0), I(-inf, 1));
  EXPECT_EQ(-I(1, 2), I(-2, -1));
  // Endpoints never pair +inf with -inf here: lo < +inf and hi > -inf.
  EXPECT_EQ(I(0, inf) + I(-inf, 0), Interval::entire());
  EXPECT_EQ(I(0, inf) - I(0, inf), Interval::entire());
  // Inexact sums widen by one ulp at most.
  const Interval s = I(0.1, 0.1) + I(0.2, 0.2);
  EXPECT_LT(s.lo(), s.hi());
  EXPECT_TRUE(ivl::contains(s, 0.1 + 0.2));
}

TEST(Interval, Mul) {
  EXPECT_EQ(I(-1, 2) * I(2, 3), I(-3, 6));
  EXPECT_EQ(I(-1, 2) * I(1, 3), I(-3, 6));
  EXPECT_EQ(I(0, 0) * I(5, 9), I(0, 0));
  EXPECT_EQ(I(0, 0) * I(-inf, inf), I(0, 0));
  EXPECT_EQ(I(1, 2) * I(0, inf), I(0, inf));
  EXPECT_EQ(I(-2, -1) * I(-3, 4), I(-8, 6));
}

TEST(Interval, Div) {
  EXPECT_EQ(I(1, 2) / I(2, 4), I(0.25, 1));
  EXPECT_EQ(I(1, 1) / I(1, 1), I(1, 1));
  EXPECT_EQ(code_of([] { I(0, 1) / I(0, 1); }), errc::zero_in_divisor);
  EXPECT_EQ(code_of([] { ivl::reciprocal(I(-1, 1)); }), errc::zero_in_divisor);
  EXPECT_EQ(I(1, 2) / I(2, inf), I(0, 1));
  const Interval third = I(1, 1) / I(3, 3);
  EXPECT_TRUE(ivl_test::q(third.lo()) < ivl_test::Q(1, 3) && ivl_test::Q(1, 3) < ivl_test::q(third.hi()));
}

TEST(Interval, IntPow) {
  EXPECT_EQ(ivl::int_pow(I(0, 1), 2), I(0, 1));
  EXPECT_EQ(ivl::int_pow(I(-1, 2), 2), I(0, 4));
  EXPECT_EQ(I(-1, 2) * I(-1, 2), I(-2, 4));
  EXPECT_EQ(ivl::int_pow(I(-2, -1), 3), I(-8, -1));
  EXPECT_EQ(ivl::int_pow(I(-2, -1), 2), I(1, 4));
  EXPECT_EQ(ivl::int_pow(I(-3, 2), 0), I(1, 1));
  EXPECT_EQ(ivl::int_pow(I(-3, 2), 1), I(-3, 2));
  EXPECT_EQ(ivl::int_pow(I(-inf, 2), 2), I(0, inf));
  EXPECT_EQ(ivl::int_pow(I(-inf, -2), 3), I(-inf, -8));
}

TEST(Interval, IntersectHull) {
  EXPECT_FALSE(ivl::intersect(I(1, 2), I(3, 4)).has_value());
  EXPECT_EQ(*ivl::intersect(I(1, 3), I(2, 4)), I(2, 3));
  EXPECT_EQ(*ivl::intersect(I(1, 2), I(2, 4)), I(2, 2));
  EXPECT_EQ(ivl::hull(I(1, 2), I(3, 4)), I(1, 4));
}

TEST(Interval, Dist) {
  EXPECT_EQ(ivl::dist(I(0, 1), I(0, 1)), 0.0);
  EXPECT_EQ(ivl::dist(I(0, 1), I(1, 3)), 2.0);
  EXPECT_EQ(ivl::dist(I(-1, 1), I(0, 0)), 1.0);
  EXPECT_EQ(code_of([] { ivl::dist(I(0, inf), I(0, 1)); }), errc::infinite_endpoint);
}

TEST(Interval, Geometry) {
  const ivl::Geometry g = ivl::geometry(I(1, 3));
  EXPECT_EQ(g.width, 2.0);
  EXPECT_EQ(g.mid, 2.0);
  EXPECT_EQ(g.rad, 1.0);
  EXPECT_EQ(g.mag, 3.0);
  EXPECT_TRUE(ivl::contains(I(0, 1), 0.0));
  EXPECT_TRUE(ivl::contains(I(0, 1), 1.0));
  EXPECT_FALSE(ivl::contains(I(0, 1), 1.5));
  EXPECT_EQ(code_of([] { ivl::mid(I(0, inf)); }), errc::infinite_endpoint);
  EXPECT_EQ(code_of([] { ivl::rad(I(-inf, 0)); }), errc::infinite_endpoint);
  EXPECT_EQ(ivl::width(I(0, inf)), inf);
  // The midpoint of a huge interval must not overflow.
  const double m = ivl::rounding::max_finite;
  EXPECT_TRUE(ivl::contains(I(-m, m), ivl::mid(I(-m, m))));
  EXPECT_TRUE(ivl::contains(I(m / 2, m), ivl::mid(I(m / 2, m))));
}

TEST(Interval, SubsetPredicates) {
  EXPECT_TRUE(ivl::subset(I(1, 2), I(0, 3)));
  EXPECT_TRUE(ivl::subset(I(1, 2), I(1, 2)));
  EXPECT_FALSE(ivl::interior_subset(I(1, 2), I(1, 3)));
  EXPECT_TRUE(ivl::interior_subset(I(1, 2), I(0.5, 3)));
  EXPECT_TRUE(ivl::interior_subset(I(1, 2), Interval::entire()));
}

// Exact point results x ∘ y lie in a ∘ b, and each rounded endpoint is the
// nearest double on its side of the exact interval endpoint.
TEST(IntervalProperty, ContainmentAndTightness) {
  ivl_test::Gen g(21);
  using ivl_test::Q;
  using ivl_test::q;
  for (int i = 0; i < 10000; ++i) {
    const Interval a = g.interval(), b = g.interval(), z = g.zero_free();
    const double x = g.point_in(a), y = g.point_in(b), w = g.point_in(z);
    ASSERT_TRUE(q((a + b).lo()) <= q(x) + q(y) && q(x) + q(y) <= q((a + b).hi()));
    ASSERT_TRUE(q((a - b).lo()) <= q(x) - q(y) && q(x) - q(y) <= q((a - b).hi()));
    ASSERT_TRUE(q((a * b).lo()) <= q(x) * q(y) && q(x) * q(y) <= q((a * b).hi()));
    ASSERT_TRUE(q((a / z).lo()) <= q(x) / q(w) && q(x) / q(w) <= q((a / z).hi()));

    const auto p = ivl_test::set_product(a.lo(), a.hi(), b.lo(), b.hi());
    ASSERT_TRUE(ivl_test::rounds_down_to((a * b).lo(), p.lo));
    ASSERT_TRUE(ivl_test::rounds_up_to((a * b).hi(), p.hi));
    ASSERT_TRUE(ivl_test::rounds_down_to((a + b).lo(), q(a.lo()) + q(b.lo())));
    ASSERT_TRUE(ivl_test::rounds_up_to((a + b).hi(), q(a.hi()) + q(b.hi())));
  }
}

TEST(IntervalProperty, IntPowRange) {
  ivl_test::Gen g(22);
  for (int i = 0; i < 5000; ++i) {
    const Interval a = g.interval(8.0);
    const unsigned n = static_cast<unsigned>(g.integer(0, 7));
    const Interval p = ivl::int_pow(a, n);
    for (int k = 0; k < 10; ++k) {
      const double x = g.point_in(a);
      ivl_test::Q e = 1;
      for (unsigned j = 0; j < n; ++j) e *= ivl_test::q(x);
      ASSERT_TRUE(ivl_test::q(p.lo()) <= e && e <= ivl_test::q(p.hi())) << ivl::to_string(a) << "^" << n;
    }
    if (n % 2 == 0 && n > 0 && ivl::contains_zero(a)) ASSERT_EQ(p.lo(), 0.0);
  }
}
