#include <gtest/gtest.h>

#include "tropskel/bounds.hpp"
#include "tropskel/error.hpp"

using namespace tropskel;

TEST(Bounds, TOfG) {
  EXPECT_EQ(t_of_g(0), 1);
  EXPECT_EQ(t_of_g(1), 3);
  EXPECT_EQ(t_of_g(2), 5);
  EXPECT_EQ(t_of_g(3), 8);
  EXPECT_EQ(t_of_g(10), 29);
  EXPECT_THROW(t_of_g(-1), InvalidArgument);
  for (long g = 0; g < 200; ++g) EXPECT_LE(t_of_g(g), t_of_g(g + 1));
}

TEST(Bounds, DBound) {
  EXPECT_EQ(d_bound(3, 2, true), 1);
  EXPECT_EQ(d_bound(4, 2, true), 2);
  EXPECT_EQ(d_bound(5, 2, true), 4);
  EXPECT_EQ(d_bound(1, 1, false), 1);
  EXPECT_EQ(d_bound(6, 3, false), 4);
  EXPECT_EQ(d_bound(6, 3, true), d_bound(6, 2, false));
  EXPECT_THROW(d_bound(0, 2, true), InvalidArgument);
  EXPECT_THROW(d_bound(3, 0, true), InvalidArgument);
  // against a floating-free rational ceiling computed the slow way
  for (long d = 1; d <= 60; ++d) {
    long num = 3 * d * d - 9 * d + 4, den = 2 * d, c = 0;
    while (c * den < num) ++c;
    while ((c - 1) * den >= num) --c;
    EXPECT_EQ(d_bound(d, 2, false), std::max(c, 1L)) << d;
  }
}

TEST(Bounds, Castelnuovo) {
  auto a = castelnuovo(4, 3);
  EXPECT_EQ(a.m0, 1);
  EXPECT_EQ(a.eps0, 1);
  EXPECT_EQ(a.pi, 1);
  auto b = castelnuovo(6, 3);
  EXPECT_EQ(b.m0, 2);
  EXPECT_EQ(b.eps0, 1);
  EXPECT_EQ(b.pi, 4);
  for (long n = 3; n <= 40; ++n) EXPECT_EQ(castelnuovo(n, n).pi, 0);
  EXPECT_THROW(castelnuovo(2, 3), InvalidArgument);
  EXPECT_THROW(castelnuovo(5, 2), InvalidArgument);
  // the classical form m0 (m0 - 1)(N - 1)/2 + m0 eps0
  for (long d = 3; d <= 50; ++d) {
    for (long n = 3; n <= d; ++n) {
      auto c = castelnuovo(d, n);
      EXPECT_EQ(c.m0 * (n - 1) + c.eps0, d - 1);
      EXPECT_LE(c.eps0, n - 2);
      EXPECT_EQ(c.pi, c.m0 * (c.m0 - 1) * (n - 1) / 2 + c.m0 * c.eps0);
      EXPECT_GE(c.pi, 0);
    }
  }
}

TEST(Bounds, EllBound) {
  EXPECT_EQ(ell_bound(1, 3, 2), 1);
  EXPECT_EQ(ell_bound(3, 4, 2), 2);
  EXPECT_EQ(ell_bound(0, 5, 3), 3);
  EXPECT_EQ(ell_bound(4, 6, 3), 4);
}

TEST(Bounds, ConsistencySweep) {
  EXPECT_TRUE(check_bound_consistency(4, 3));
  EXPECT_TRUE(check_bound_consistency(6, 3));
  for (long d = 3; d <= 50; ++d) {
    for (long n = 3; n <= d; ++n) EXPECT_TRUE(check_bound_consistency(d, n)) << d << " " << n;
  }
  EXPECT_THROW(check_bound_consistency(3, 2), InvalidArgument);
  EXPECT_THROW(check_bound_consistency(3, 4), InvalidArgument);
}

TEST(Bounds, PlanarBranchDominatesPlaneGenus) {
  for (long d = 3; d <= 50; ++d) EXPECT_GE(d_bound(d, 2, true), ell_bound(plane_genus(d), d, 2)) << d;
}

TEST(Bounds, Report) {
  auto r = bound_report(std::nullopt, 6, 3, false);
  EXPECT_EQ(*r.g, 4);
  EXPECT_EQ(*r.d_bound, 4);
  EXPECT_EQ(*r.ell_bound, 4);
  EXPECT_EQ(r.castelnuovo->pi, 4);
  auto s = bound_report(2, std::nullopt, std::nullopt, false);
  EXPECT_EQ(*s.t_g, 5);
  EXPECT_FALSE(s.d_bound);
}
