#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "hypspec/errors.hpp"
#include "hypspec/kernels.hpp"
#include "series_oracle.hpp"

using namespace hypspec;
using std::numbers::pi;
using cplx = std::complex<double>;

TEST(Resolvent, ClosedFormNTwo) {
  // sigma = i: e^{-r} / (4 pi sinh r)
  const cplx v = resolvent_kernel(2, cplx(0, 1), 1.0);
  EXPECT_NEAR(v.real(), std::exp(-1.0) / (4 * pi * std::sinh(1.0)), 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-16);
  EXPECT_NEAR(v.real(), 0.0249105565247, 1e-12);
}

TEST(Resolvent, SideHandling) {
  EXPECT_THROW(resolvent_kernel(2, 1.0, 1.0), ContractError);
  EXPECT_THROW(resolvent_kernel(2, cplx(1, 0.5), 1.0, Side::lower), ContractError);
  const cplx a = resolvent_kernel(4, 1.5, 0.7, Side::upper);
  const cplx b = resolvent_kernel(4, 1.5, 0.7, Side::lower);
  EXPECT_LT(std::abs(a - std::conj(b)), 1e-15 * std::abs(a));
  // sigma = 0 is regular
  EXPECT_TRUE(std::isfinite(resolvent_kernel(2, 0.0, 1.0, Side::upper).real()));
}

TEST(Resolvent, ConjugateSymmetryOffAxis) {
  for (int n : {2, 4, 6}) {
    const cplx s{0.8, 0.4};
    const cplx a = resolvent_kernel(n, s, 1.3);
    const cplx b = resolvent_kernel(n, -std::conj(s), 1.3);
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-13 * std::abs(a));
  }
}

TEST(SpectralMeasure, ClosedFormNTwo) {
  EXPECT_NEAR(spectral_measure(2, 2.0, 1.0), 2 * std::sin(2.0) / (2 * pi * pi * std::sinh(1.0)), 1e-15);
  EXPECT_NEAR(spectral_measure(2, 2.0, 1.0), 0.0783960159905, 1e-12);
  // d/dsigma
  const double s = 2.0, r = 1.0;
  EXPECT_NEAR(spectral_measure_deriv(2, 1, s, r), (std::sin(s * r) + s * r * std::cos(s * r)) / (2 * pi * pi * std::sinh(r)),
              1e-15);
  EXPECT_NEAR(spectral_measure_deriv(2, 1, 1.0, 1.0), 0.0595655050786, 1e-12);
  EXPECT_NEAR(spectral_measure_at_origin(2, 1, 1.0), 1.0 / (pi * pi), 1e-15);
}

TEST(SpectralMeasure, HigherOrdersAgainstSeriesOracle) {
  for (int n : {4, 6, 8}) {
    for (double r : {0.3, 1.0, 3.0}) {
      for (double s : {0.2, 1.0, 4.0}) {
        const double expect = oracle::complex_measure(n, s, r).real();
        EXPECT_NEAR(spectral_measure(n, s, r), expect, 1e-10 * std::abs(oracle::complex_measure(n, s, r)))
            << n << " " << r << " " << s;
      }
    }
  }
}

TEST(SpectralMeasure, SigmaDerivativesMatchFiniteDifferences) {
  const double h = 1e-4;
  for (int n : {2, 4}) {
    for (int j = 1; j <= 3; ++j) {
      const double s = 1.3, r = 0.9;
      const double fd = (spectral_measure_deriv(n, j - 1, s + h, r) - spectral_measure_deriv(n, j - 1, s - h, r)) / (2 * h);
      EXPECT_NEAR(spectral_measure_deriv(n, j, s, r), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(SpectralMeasure, StoneFormulaAgrees) {
  for (int n : {2, 4, 6}) {
    for (double s : {0.5, 2.0}) {
      for (double r : {0.5, 2.0}) {
        const double a = spectral_measure(n, s, r), b = spectral_measure_stone(n, s, r);
        EXPECT_NEAR(a, b, 1e-12 * std::max(1e-6, std::abs(oracle::complex_measure(n, s, r))));
      }
    }
  }
}

TEST(SpectralMeasure, OriginLimit) {
  for (double s : {0.5, 1.0, 3.0}) EXPECT_NEAR(spectral_measure_at_origin(2, 0, s), s * s / (2 * pi * pi), 1e-15);
  for (int n : {2, 4, 6}) {
    for (double s : {0.5, 2.0}) {
      const double at0 = spectral_measure_at_origin(n, 0, s);
      EXPECT_NEAR(spectral_measure(n, s, 1e-7), at0, 1e-8 * std::abs(at0));
      EXPECT_NEAR(spectral_measure(n, s, 1e-3), at0, 1e-3 * std::abs(at0) + 1e-12);
    }
  }
  EXPECT_NEAR(spectral_measure_at_origin(2, 1, 2.0), 2 * 2.0 / (2 * pi * pi), 1e-15);
}

TEST(SpectralMeasure, Errors) {
  EXPECT_THROW(spectral_measure(3, 1.0, 1.0), UnsupportedOrderError);
  EXPECT_THROW(spectral_measure(22, 1.0, 1.0), UnsupportedOrderError);
  EXPECT_THROW(spectral_measure(2, 1.0, 0.0), DomainError);
  EXPECT_THROW(spectral_measure(2, -1.0, 1.0), DomainError);
  EXPECT_THROW(spectral_measure_deriv(2, 7, 1.0, 1.0), UnsupportedOrderError);
}

TEST(HeatKernel, HyperbolicThreeSpaceAnchor) {
  for (double t : {0.1, 1.0, 3.0}) {
    for (double r : {0.05, 1.0, 4.0}) {
      const double h = heat_kernel_h3(t, r);
      EXPECT_NEAR(heat_kernel_recursion(2, t, r), h, 1e-13 * h);
      EXPECT_NEAR(heat_kernel_spectral(2, t, r), h, 1e-10 * h);
    }
  }
}

TEST(HeatKernel, HigherOrderRoutesAgree) {
  for (int n : {4, 6}) {
    for (double t : {0.5, 2.0}) {
      for (double r : {0.5, 2.0}) {
        const double a = heat_kernel_recursion(n, t, r);
        EXPECT_NEAR(heat_kernel_spectral(n, t, r), a, 1e-9 * std::abs(a));
        auto prof = oracle::heat_profile(t, r, 24);
        const double o = oracle::apply_D_power(prof, r, n / 2).real() / std::sqrt(2 * pi);
        EXPECT_NEAR(a, o, 1e-11 * std::abs(o));
      }
    }
  }
}

TEST(HeatKernel, SpectralIntegralOfGaussian) {
  // ∫ e^{-t sigma^2} dE dsigma computed on the real axis
  const double t = 0.8, r = 1.2;
  const double v = spectral_integral(2, [t](double s) { return std::exp(-t * s * s); }, r, 12.0);
  EXPECT_NEAR(v, heat_kernel_h3(t, r), 1e-11);
}

TEST(HeatKernel, Errors) {
  EXPECT_THROW(heat_kernel_recursion(2, 0.0, 1.0), DomainError);
  EXPECT_THROW(heat_kernel_spectral(5, 1.0, 1.0), UnsupportedOrderError);
}
