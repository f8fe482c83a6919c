#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/slope_fit.hpp"

using namespace hypspec;

TEST(SlopeFit, ExactLine) {
  const auto xs = linspace(0.0, 9.0, 10);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(-1.5 * x + 4.0);
  const auto f = fit_slope(xs, ys);
  EXPECT_NEAR(f.slope, -1.5, 1e-14);
  EXPECT_NEAR(f.intercept, 4.0, 1e-13);
  EXPECT_NEAR(f.residual_rms, 0.0, 1e-13);
  EXPECT_NEAR(f.confidence_halfwidth, 0.0, 1e-13);
}

TEST(SlopeFit, PowerLaw) {
  const auto xs = logspace(1.0, 1000.0, 12);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, -2.5));
  const auto f = fit_loglog(xs, ys);
  EXPECT_NEAR(f.slope, -2.5, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-11);
}

TEST(SlopeFit, ConfidenceCoverage) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> noise(0.0, 0.1);
  const auto xs = linspace(0.0, 1.0, 10);
  int covered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> ys;
    for (double x : xs) ys.push_back(2.0 * x + 1.0 + noise(rng));
    const auto f = fit_slope(xs, ys);
    if (std::abs(f.slope - 2.0) <= f.confidence_halfwidth) ++covered;
  }
  EXPECT_GE(covered, 90);
}

TEST(SlopeFit, Errors) {
  const std::vector<double> few{1, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(fit_slope(few, few), ContractError);
  const std::vector<double> same(8, 1.0), ys{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_THROW(fit_slope(same, ys), ContractError);
  std::vector<double> neg = ys;
  neg[3] = -1.0;
  EXPECT_THROW(fit_loglog(ys, neg), ContractError);
  std::vector<double> bad = ys;
  bad[0] = std::nan("");
  EXPECT_THROW(fit_slope(bad, ys), ContractError);
}
