#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/multiplier.hpp"
#include "hypspec/verify.hpp"

using namespace hypspec;
using std::numbers::pi;

TEST(Envelope, Formulas) {
  EXPECT_DOUBLE_EQ(pointwise_envelope(2, Regime::high, 0, 4.0, 0.5), 16.0 / 3.0);
  EXPECT_DOUBLE_EQ(pointwise_envelope(2, Regime::high, 0, 4.0, 2.0), 4.0 * std::exp(-2.0));
  EXPECT_DOUBLE_EQ(pointwise_envelope(4, Regime::high, 2, 3.0, 2.0), 9.0 * 4.0 * std::exp(-4.0));
  EXPECT_DOUBLE_EQ(pointwise_envelope(2, Regime::high, 0, 4.0, 1.0), std::max(16.0 / 5.0, 4.0 * std::exp(-1.0)));
  EXPECT_DOUBLE_EQ(pointwise_envelope(2, Regime::low, 0, 0.5, 0.3), 0.25);
  EXPECT_DOUBLE_EQ(pointwise_envelope(2, Regime::low, 0, 0.5, 2.0), 0.25 * 2.0 / 2.0 * std::exp(-2.0));
  EXPECT_THROW(pointwise_envelope(2, Regime::low, 1, 0.5, 1.0), ContractError);
  EXPECT_THROW(pointwise_envelope(2, Regime::high, 3, 2.0, 1.0), ContractError);
}

TEST(BoundCheck, HighRegimeNearZoneNTwo) {
  const auto rep = check_pointwise_bound(2, Regime::high, 0, Zone::near);
  EXPECT_TRUE(rep.passed);
  EXPECT_LE(rep.sup_ratio, 1.0 / (pi * pi));
  EXPECT_GT(rep.sup_ratio, 0.08);
  EXPECT_EQ(rep.grid_sizes.size(), 4u);
}

TEST(BoundCheck, ScaledEnvelopeScalesRatio) {
  BoundCheckOptions o;
  o.refinements = 1;
  const auto a = check_pointwise_bound(2, Regime::low, 0, Zone::far, o);
  o.envelope_scale = 2.0;
  const auto b = check_pointwise_bound(2, Regime::low, 0, Zone::far, o);
  EXPECT_DOUBLE_EQ(b.sup_ratio, a.sup_ratio / 2.0);
}

TEST(BoundCheck, SinglePointGridIsInconclusive) {
  BoundCheckOptions o;
  o.base_count = 1;
  const auto rep = grid_sup_ratio(
      "const", [](double, double) { return 1.0; }, [](double, double) { return 2.0; }, 1.0, 2.0, 1.0, 2.0, o);
  EXPECT_EQ(rep.sup_ratio, 0.5);
  EXPECT_FALSE(rep.passed);
  EXPECT_TRUE(rep.refinement_deltas.empty());
}

TEST(BoundCheck, DerivativeBound) {
  BoundCheckOptions o;
  o.refinements = 1;
  const auto rep = deriv_bound_check(2, 1, 1.0, 100.0, o);
  EXPECT_TRUE(std::isfinite(rep.sup_ratio));
  EXPECT_GT(rep.sup_ratio, 0.0);
}

TEST(Restriction, OriginValueAndSlope) {
  for (double s : {1.0, 10.0, 100.0}) EXPECT_NEAR(l1_linf_norm(2, s), s * s / (2 * pi * pi), 1e-10 * s * s);
  EXPECT_NEAR(l1_linf_norm(2, 20.0) / l1_linf_norm(2, 10.0), 4.0, 1e-10);
  const auto rep = restriction_scan(2, logspace(10.0, 1000.0, 12));
  EXPECT_NEAR(rep.fit.slope, 2.0, 1e-6);
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(restriction_scan(4, logspace(10.0, 1000.0, 12)).fit.slope, 4.0, 0.05);
}

TEST(KunzeStein, ConvergentAndDivergent) {
  const auto ok = kunze_stein_bound([](double r) { return (1.0 + r) * std::exp(-r); }, 2, 3.0);
  EXPECT_FALSE(ok.divergent);
  EXPECT_TRUE(std::isfinite(ok.bound));
  EXPECT_NEAR(ok.bound, std::pow(ok.integral, 2.0 / 3.0), 1e-14 * ok.bound);
  const auto bad = kunze_stein_bound([](double r) { return std::exp(-0.5 * r); }, 2, 2.1);
  EXPECT_TRUE(bad.divergent);
  EXPECT_TRUE(std::isinf(bad.bound));
  const auto zero = kunze_stein_bound([](double) { return 0.0; }, 2, 3.0);
  EXPECT_EQ(zero.integral, 0.0);
  EXPECT_EQ(zero.bound, 0.0);
}

TEST(KunzeStein, PolynomialExampleIntegral) {
  // q = 4, n = 2, kappa = e^{-r}: ∫ sinh^2 r (1 + r) e^{-r} e^{-2r} dr
  const auto rep = kunze_stein_bound([](double r) { return std::exp(-r); }, 2, 4.0);
  // sinh^2 r e^{-3r} = (e^{-r} - 2 e^{-3r} + e^{-5r}) / 4; times (1 + r)
  const double expect = 0.25 * ((1 + 1) - 2 * (1.0 / 3 + 1.0 / 9) + (1.0 / 5 + 1.0 / 25));
  EXPECT_NEAR(rep.integral, expect, 1e-10);
}

TEST(Uniformity, ZeroAndGaussian) {
  const std::vector<double> alphas{1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125};
  const auto z = multiplier_uniformity(zero_multiplier(), alphas);
  EXPECT_EQ(z.max_min_ratio, 1.0);
  EXPECT_EQ(z.trend_slope, 0.0);
  EXPECT_TRUE(z.passed);
  const auto g = multiplier_uniformity(gaussian_multiplier(), alphas);
  ASSERT_EQ(g.norms.size(), alphas.size());
  for (double v : g.norms) EXPECT_TRUE(std::isfinite(v));
  EXPECT_LT(g.norms.back(), g.norms.front());
}

TEST(Positivity, GramMatrix) {
  const auto ok = positivity_witness(gaussian_multiplier(), 0.5, 32);
  EXPECT_TRUE(ok.passed);
  EXPECT_GT(ok.max_eigenvalue, 0.0);
  const auto g = gaussian_multiplier();
  Multiplier neg{"neg", [g](double s) { return -g(s); }, 1e9, 0.0};
  EXPECT_FALSE(positivity_witness(neg, 0.5, 32).passed);
}
