#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/oscillatory.hpp"

using namespace hypspec;
using cplx = std::complex<double>;

namespace {

cplx gk(const std::function<double(double)>& re, const std::function<double(double)>& im, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  return {gauss_kronrod<double, 61>::integrate(re, a, b, 20, 1e-14), gauss_kronrod<double, 61>::integrate(im, a, b, 20, 1e-14)};
}

}  // namespace

TEST(UnitMoments, AgainstQuadrature) {
  for (double th : {0.0, 0.3, 0.49999, 0.5, 0.7, 5.0, -12.0}) {
    cplx m[4];
    unit_moments(th, m);
    for (int k = 0; k < 4; ++k) {
      const cplx q = gk([&](double x) { return std::pow(x, k) * std::cos(th * x); },
                        [&](double x) { return std::pow(x, k) * std::sin(th * x); }, 0.0, 1.0);
      EXPECT_LT(std::abs(m[k] - q), 1e-14) << th << " " << k;
    }
  }
}

TEST(UnitMoments, ContinuousAtBranchSwitch) {
  cplx a[4], b[4];
  // the moments move by O(1e-12) across a 2e-12 step; both branches must agree to that
  unit_moments(0.5 - 1e-12, a);
  unit_moments(0.5 + 1e-12, b);
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(a[k] - b[k]), 2e-12);
}

TEST(SplineFilon, LinearDataIsExact) {
  const auto t = linspace(0.0, 2.0, 9);
  std::vector<double> g;
  for (double x : t) g.push_back(3 * x + 1);
  const SplineFilon s(t, g);
  for (double w : {0.0, 0.4, 7.0, 300.0}) {
    const cplx iw{0, w};
    cplx expect;
    if (w == 0.0) {
      expect = 8.0;
    } else {
      const cplx e = std::exp(iw * 2.0);
      expect = (7.0 * e - 1.0) / iw - 3.0 * (e - 1.0) / (iw * iw);
    }
    EXPECT_LT(std::abs(s.fourier(w) - expect), 1e-13 * std::max(1.0, std::abs(expect))) << w;
  }
}

TEST(SplineFilon, IntegratesItsOwnSplineExactly) {
  const std::vector<double> t{0.0, 0.3, 0.45, 1.0, 1.2, 2.0};
  const std::vector<double> g{1.0, -0.5, 0.2, 0.9, 0.0, 0.4};
  const SplineFilon s(t, g);
  for (double w : {1.0, 25.0}) {
    cplx q = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      q += gk([&](double x) { return s.value(x) * std::cos(w * x); }, [&](double x) { return s.value(x) * std::sin(w * x); },
              t[i], t[i + 1]);
    }
    EXPECT_LT(std::abs(s.fourier(w) - q), 1e-13);
  }
  EXPECT_DOUBLE_EQ(s.value(0.45), 0.2);
}

TEST(SplineFilon, SmoothFunctionAtHighFrequency) {
  const auto t = linspace(0.0, 1.0, 2001);
  std::vector<double> g;
  for (double x : t) g.push_back(std::exp(-x * x));
  const SplineFilon s(t, g);
  const double w = 400.0;
  const cplx q = gk([&](double x) { return std::exp(-x * x) * std::cos(w * x); },
                    [&](double x) { return std::exp(-x * x) * std::sin(w * x); }, 0.0, 1.0);
  EXPECT_LT(std::abs(s.fourier(w) - q), 1e-9);
}

TEST(SplineFilon, GridAndManyAgreeWithSingle) {
  const auto t = linspace(0.0, 1.0, 513);
  std::vector<double> g;
  for (double x : t) g.push_back(std::cos(3 * x) * (1 - x));
  const SplineFilon s(t, g);
  const auto grid = s.fourier_grid(0.7, 600);
  std::vector<double> ws;
  for (std::size_t j = 0; j < 600; ++j) ws.push_back(0.7 * static_cast<double>(j));
  const auto many = s.fourier_many(ws);
  for (std::size_t j = 0; j < 600; j += 37) {
    const cplx one = s.fourier(ws[j]);
    EXPECT_LT(std::abs(grid[j] - one), 1e-12);
    EXPECT_LT(std::abs(many[j] - one), 1e-12);
  }
}

TEST(SplineFilon, RejectsBadNodes) {
  EXPECT_THROW(SplineFilon({0.0, 1.0}, {1.0, 2.0}), ContractError);
  EXPECT_THROW(SplineFilon({0.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), ContractError);
}
