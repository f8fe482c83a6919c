#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "hypspec/symbolic.hpp"

namespace hypspec {

// Which boundary value to take when sigma is real.
enum class Side { upper, lower };

// D^k e^{phase i sigma r} for n = 2k, built once and cached. Throws
// UnsupportedOrderError unless n is even and 2 <= n <= 20.
const SymbolicRadialKernel& kernel_symbol(int n, int phase = 1);

// Resolvent kernel on H^{n+1}:
//   Im sigma > 0: -(1/(2 i sigma)) D^k e^{ i sigma r}
//   Im sigma < 0: +(1/(2 i sigma)) D^k e^{-i sigma r}
// Real sigma needs an explicit side. The 1/sigma is cancelled symbolically, so
// sigma = 0 is allowed.
std::complex<double> resolvent_kernel(int n, std::complex<double> sigma, double r,
                                      std::optional<Side> side = std::nullopt);

// dE(sigma, r) = (1/pi) Re D^k e^{i sigma r}; for n = 2 this is
// sigma sin(sigma r) / (2 pi^2 sinh r).
double spectral_measure(int n, double sigma, double r);

// (d/dsigma)^j dE, 0 <= j <= 6.
double spectral_measure_deriv(int n, int j, double sigma, double r);

// (sigma / (pi i)) (R(sigma + i0) - R(sigma - i0)) from resolvent_kernel.
double spectral_measure_stone(int n, double sigma, double r);

// Value of dE (and its sigma-derivatives up to j) at r -> 0.
double spectral_measure_at_origin(int n, int j, double sigma);

// Heat kernel from the functional-calculus formula:
// (1/sqrt(2 pi)) D^k [e^{-r^2/(4t)} / sqrt(2t)].
double heat_kernel_recursion(int n, double t, double r);

// The same kernel as the spectral integral ∫_0^∞ e^{-t sigma^2} dE(sigma, r) dsigma,
// evaluated on the shifted contour sigma = tau + i r/(2t) where the integrand
// has no oscillation or cancellation.
double heat_kernel_spectral(int n, double t, double r);

// ∫_0^{sigma_max} F(sigma) dE(sigma, r) dsigma by adaptive Gauss-Kronrod on the real axis.
double spectral_integral(int n, const std::function<double(double)>& F, double r, double sigma_max,
                         double tol = 1e-12);

// (4 pi t)^{-3/2} (r / sinh r) e^{-r^2/(4t)}, the H^3 heat kernel.
double heat_kernel_h3(double t, double r);

}  // namespace hypspec
