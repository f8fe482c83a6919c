#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypspec/chi_plus.hpp"
#include "hypspec/errors.hpp"

using namespace hypspec;
using cplx = std::complex<double>;

TEST(ChiPlusEval, Values) {
  EXPECT_NEAR(std::abs(chi_plus_eval(0.0, 2.0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(chi_plus_eval(0.0, -2.0), cplx(0.0));
  EXPECT_NEAR(chi_plus_eval(1.0, 2.0).real(), 2.0, 1e-15);
  EXPECT_NEAR(chi_plus_eval(-0.5, 4.0).real(), 0.5 / std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_NEAR(chi_plus_eval(-0.5, 4.0).real(), 0.282095, 1e-6);
  // x^{is} has modulus one
  EXPECT_NEAR(std::abs(chi_plus_eval(cplx(0, 2.0), 3.0)),
              std::sqrt(std::sinh(2.0 * std::numbers::pi) / (2.0 * std::numbers::pi)), 1e-10);
  EXPECT_THROW(chi_plus_eval(-1.0, 1.0), ContractError);
  EXPECT_THROW(chi_plus_eval(-1.5, 1.0), ContractError);
}

TEST(ChiPlusPair, HeavisideAndDelta) {
  const auto g = gaussian_test_function();
  for (double x : {-2.0, 0.0, 1.0}) {
    EXPECT_NEAR(chi_plus_pair(0.0, g, x).real(), 0.5 * std::sqrt(std::numbers::pi) * (1 + std::erf(x)), 1e-9);
    EXPECT_NEAR(chi_plus_pair(-1.0, g, x).real(), std::exp(-x * x), 1e-9);
  }
  EXPECT_NEAR(chi_plus_pair(0.0, g, 20.0).real(), std::sqrt(std::numbers::pi), 1e-9);
}

TEST(ChiPlusPair, PolynomialBumpIntegrals) {
  const auto b = polynomial_bump(4);
  EXPECT_NEAR(chi_plus_pair(0.0, b, 1.5).real(), 256.0 / 315.0, 1e-10);
  // a = -2 is the derivative
  const double x = 0.3;
  EXPECT_NEAR(chi_plus_pair(-2.0, b, x).real(), -8 * x * std::pow(1 - x * x, 3), 1e-9);
  // a = 1: ∫ (x - y) f(y) dy; beyond the support and f even this is x ∫ f
  EXPECT_NEAR(chi_plus_pair(1.0, b, 2.0).real(), 2.0 * 256.0 / 315.0, 1e-10);
  EXPECT_THROW(chi_plus_pair(-6.0, b, 0.0), ContractError);
}

TEST(ChiPlusPair, AnalyticInOrder) {
  // continuity across a = -1 where the pairing switches derivative order
  const auto g = gaussian_test_function();
  const cplx a1 = chi_plus_pair(-1.0 + 1e-7, g, 0.4);
  const cplx a2 = chi_plus_pair(-1.0 - 1e-7, g, 0.4);
  EXPECT_NEAR(std::abs(a1 - a2), 0.0, 1e-6);
}

TEST(ChiPlusSemigroup, Identity) {
  const auto g = gaussian_test_function();
  for (auto [mu, nu] : {std::pair{0.0, 0.0}, std::pair{0.5, 0.25}, std::pair{-0.5, 1.0}}) {
    const auto [lhs, rhs] = chi_plus_semigroup(mu, nu, g, 1.0);
    EXPECT_LT(std::abs(lhs - rhs), 1e-6 * std::abs(rhs)) << mu << " " << nu;
  }
}

TEST(GammaBound, Values) {
  const auto [l0, r0] = gamma_multiplier_bound(0.0);
  EXPECT_NEAR(l0, 1.0, 1e-15);
  EXPECT_EQ(r0, 1.0);
  const auto [l, r] = gamma_multiplier_bound(10.0);
  const double pi = std::numbers::pi;
  EXPECT_NEAR(l, std::sqrt(std::sinh(10 * pi) / (10 * pi)), 1e-9 * l);
  EXPECT_NEAR(r, std::exp(5 * pi), 1e-9 * r);
  EXPECT_NEAR(l / r, 0.126, 5e-4);
  EXPECT_EQ(gamma_multiplier_bound(-10.0).first, l);
  for (double s = -20; s <= 20; s += 0.37) {
    const auto [a, b] = gamma_multiplier_bound(s);
    EXPECT_LE(a, b * (1 + 1e-12));
  }
}

TEST(TestFunctions, ByName) {
  EXPECT_EQ(test_function_from_name("bump:m=5").max_order, 5);
  EXPECT_THROW(test_function_from_name("square"), ContractError);
  const auto d = derivative_of(polynomial_bump(3), 1);
  EXPECT_NEAR(d(0.5), -6 * 0.5 * 0.75 * 0.75, 1e-14);
}
