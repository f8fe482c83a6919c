#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypspec/special.hpp"

using namespace hypspec;

TEST(Gamma, ImaginaryAxisModulus) {
  for (double y : {0.1, 1.0, 3.0, 10.0}) {
    const double expect = std::numbers::pi * y / std::sinh(std::numbers::pi * y);
    EXPECT_NEAR(std::norm(gamma_complex({1.0, y})), expect, 1e-12 * expect);
  }
}

TEST(Gamma, RealAxisAndReflection) {
  for (double x : {0.5, 1.0, 2.5, 7.0}) EXPECT_NEAR(gamma_complex(x).real(), std::tgamma(x), 1e-13 * std::tgamma(x));
  const std::complex<double> z{0.3, 0.8};
  const auto lhs = gamma_complex(z) * gamma_complex(1.0 - z);
  const auto rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
  EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
  EXPECT_EQ(reciprocal_gamma(-2.0), 0.0);
  EXPECT_LT(std::abs(reciprocal_gamma(z) * gamma_complex(z) - 1.0), 1e-13);
}

TEST(Hermite, LowOrders) {
  const double x = 0.7;
  const auto h = hermite_values(4, x);
  ASSERT_EQ(h.size(), 5u);
  EXPECT_EQ(h[0], 1.0);
  EXPECT_DOUBLE_EQ(h[1], 2 * x);
  EXPECT_DOUBLE_EQ(h[2], 4 * x * x - 2);
  EXPECT_DOUBLE_EQ(h[3], 8 * x * x * x - 12 * x);
  EXPECT_NEAR(h[4], 16 * std::pow(x, 4) - 48 * x * x + 12, 1e-13);
}

TEST(GaussianDerivatives, AgainstClosedForm) {
  const double a = 0.6, r = 1.1;
  const auto d = gaussian_derivatives(a, r, 3);
  const double g = std::exp(-a * r * r);
  EXPECT_DOUBLE_EQ(d[0], g);
  EXPECT_NEAR(d[1], -2 * a * r * g, 1e-15);
  EXPECT_NEAR(d[2], (4 * a * a * r * r - 2 * a) * g, 1e-15);
  EXPECT_NEAR(d[3], (-8 * a * a * a * r * r * r + 12 * a * a * r) * g, 1e-14);
}
