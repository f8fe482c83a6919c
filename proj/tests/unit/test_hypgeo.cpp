#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypspec/errors.hpp"
#include "hypspec/hypgeo.hpp"

using namespace hypspec;

namespace {

HalfSpacePoint pt(double x, std::vector<double> y) { return {x, std::move(y)}; }

double g0_entry(const HalfSpaceMetric& m, double x, std::vector<double> y, int a, int b) {
  return m.evaluate(x, y).g0(a, b);
}

}  // namespace

TEST(HyperbolicDistance, ClosedFormCases) {
  EXPECT_EQ(hyperbolic_distance({pt(1, {0}), pt(1, {0})}), 0.0);
  EXPECT_NEAR(hyperbolic_distance({pt(1, {0}), pt(std::exp(1.0), {0})}), 1.0, 1e-15);
  EXPECT_NEAR(hyperbolic_distance({pt(1, {0, 0}), pt(1, {1, 0})}), std::acosh(1.5), 1e-15);
  EXPECT_NEAR(hyperbolic_distance({pt(1, {0, 0}), pt(1, {1, 0})}), 0.962424, 1e-6);
}

TEST(HyperbolicDistance, RejectsNonpositiveX) {
  EXPECT_THROW(hyperbolic_distance({pt(0, {0}), pt(1, {0})}), DomainError);
  EXPECT_THROW(bdf_eval({pt(1, {0}), pt(-1, {0})}), DomainError);
}

TEST(HyperbolicDistance, SymmetricAndTriangle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lx(-4.0, 1.0), yy(-3.0, 3.0);
  auto draw = [&] { return pt(std::exp(lx(rng)), {yy(rng), yy(rng)}); };
  for (int i = 0; i < 10000; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    const double ab = hyperbolic_distance({a, b});
    EXPECT_EQ(ab, hyperbolic_distance({b, a}));
    const double ac = hyperbolic_distance({a, c}), cb = hyperbolic_distance({c, b});
    ASSERT_LE(ab, ac + cb + 1e-12 * std::max(1.0, ab));
  }
}

TEST(BoundaryDefining, Examples) {
  const auto d = bdf_eval({pt(1, {0}), pt(1, {0})});
  EXPECT_NEAR(d.rho_F, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d.rho_L, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d.rho_R, 1.0 / std::sqrt(2.0), 1e-15);
  for (double t : {1e-6, 0.3, 40.0}) {
    const auto e = bdf_eval({pt(t, {0}), pt(t, {0})});
    EXPECT_NEAR(e.rho_L * e.rho_R, 0.5, 1e-15);
  }
  const auto f = bdf_eval({pt(0.01, {0}), pt(1, {0})});
  EXPECT_NEAR(f.rho_L * f.rho_R, 0.01 / 1.0001, 1e-15);
}

TEST(BoundaryDefining, ProductIdentityAndSymmetry) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> lx(-6.0, 1.0), yy(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const auto p = pt(std::exp(lx(rng)), {yy(rng), yy(rng)});
    const auto q = pt(std::exp(lx(rng)), {yy(rng), yy(rng)});
    const auto a = bdf_eval({p, q});
    const auto b = bdf_eval({q, p});
    EXPECT_NEAR(a.rho_L * a.rho_R * a.rho_F * a.rho_F / (p.x * q.x), 1.0, 1e-14);
    EXPECT_NEAR(a.rho_L * a.rho_F / p.x, 1.0, 1e-15);
    EXPECT_EQ(a.rho_L, b.rho_R);
    EXPECT_GT(a.rho_L, 0.0);
    EXPECT_GT(a.rho_F, 0.0);
  }
}

TEST(DistanceDefect, Examples) {
  for (double t : {1e-5, 1.0, 100.0}) EXPECT_NEAR(distance_defect({pt(t, {0}), pt(t, {0})}), -std::log(2.0), 1e-13);
  // vertical pair: b = log(x'^2 / (x^2 + x'^2)), tending to 0 from below
  const double b = distance_defect({pt(1e-4, {0}), pt(1.0, {0})});
  EXPECT_LT(b, 0.0);
  EXPECT_NEAR(b, std::log(1.0 / (1.0 + 1e-8)), 1e-12);
  const double far = distance_defect({pt(1, {0, 0}), pt(1, {10, 0})});
  EXPECT_LE(std::abs(far), 1.0);
  EXPECT_NEAR(far, std::acosh(51.0) + std::log(1.0 / 102.0), 1e-12);
}

TEST(DistanceDefect, BoundedAsPointsApproachBoundary) {
  double sup = 0.0;
  for (double x : {1e-8, 1e-6, 1e-4, 1e-2, 1.0}) {
    for (double xp : {1e-8, 1e-5, 1e-2, 1.0}) {
      for (double g : {0.0, 0.1, 1.0, 10.0}) sup = std::max(sup, std::abs(distance_defect({pt(x, {0}), pt(xp, {g})})));
    }
  }
  EXPECT_LE(sup, 1.0);
}

TEST(Metric, ExactHyperbolicIsIdentity) {
  const auto m = exact_hyperbolic(3);
  EXPECT_TRUE(m.is_exact_hyperbolic());
  const auto s = m.evaluate(0.3, std::vector<double>{1, 2, 3});
  EXPECT_TRUE(s.g0.isIdentity());
  EXPECT_TRUE(s.dg0_dx.isZero());
}

TEST(Metric, BumpDerivativesMatchFiniteDifferences) {
  BumpParams p;
  p.amplitude = 0.1;
  const auto m = conformal_bump(2, p);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(0.1, 0.9), uy(-0.4, 0.4);
  const double h = 1e-6;
  for (int k = 0; k < 20; ++k) {
    const double x = ux(rng);
    const std::vector<double> y{uy(rng), uy(rng)};
    const auto s = m.evaluate(x, y);
    const double fd_x = (g0_entry(m, x + h, y, 0, 0) - g0_entry(m, x - h, y, 0, 0)) / (2 * h);
    EXPECT_NEAR(s.dg0_dx(0, 0), fd_x, 1e-6 * std::max(1.0, std::abs(fd_x)));
    for (int i = 0; i < 2; ++i) {
      auto yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      const double fd = (g0_entry(m, x, yp, 1, 1) - g0_entry(m, x, ym, 1, 1)) / (2 * h);
      EXPECT_NEAR(s.dg0_dy[i](1, 1), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.g0);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(Metric, BumpIsIdentityOutsideSupport) {
  const auto m = conformal_bump(2, BumpParams{});
  const double R = m.support_radius();
  EXPECT_GT(R, 0.0);
  const auto s = m.evaluate(R + 0.01, std::vector<double>{0.0, 0.0});
  EXPECT_TRUE(s.g0.isIdentity(0.0));
  const auto t = m.evaluate(0.5, std::vector<double>{R + 0.6, 0.0});
  EXPECT_TRUE(t.g0.isIdentity(0.0));
}

TEST(Metric, RejectsBadBump) {
  BumpParams p;
  p.amplitude = -1.0;
  EXPECT_THROW(conformal_bump(2, p), ContractError);
  p.amplitude = 0.1;
  p.center = {0.5, 0.0};
  EXPECT_THROW(conformal_bump(2, p), ContractError);
}

TEST(Warped, VolumeDensity) {
  const auto s2 = warp_sinh(2);
  const auto s4 = warp_sinh(4);
  for (double r : {0.01, 1.0, 7.0}) {
    EXPECT_NEAR(warped_volume_density(s2, r), 1.0, 1e-15);
    EXPECT_NEAR(warped_volume_density(s4, r), 1.0, 1e-15);
  }
  const auto g = warp_sinh_plus_gaussian(2);
  EXPECT_NEAR(warped_volume_density(g, 20.0), 1.0, 1e-8);
  EXPECT_THROW(warped_volume_density(g, 0.0), DomainError);
}

TEST(Warped, SmoothPoleAndAsymptoticCurvature) {
  const auto g = warp_sinh_plus_gaussian(2);
  EXPECT_NEAR(g.warp(1e-4).f / 1e-4, 1.0, 1e-7);
  EXPECT_NEAR(g.radial_curvature(25.0), -1.0, 1e-10);
  EXPECT_GT(g.warp(0.5).f, 0.0);
}
