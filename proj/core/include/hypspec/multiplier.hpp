#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypspec/transform.hpp"

namespace hypspec {

// Even spectral multiplier supported in [-1, 1].
struct Multiplier {
  std::string name;
  std::function<double(double)> F;
  double sobolev_order = 0.0;     // nominal s with F in H^s
  double max_frequency = 0.0;     // fastest oscillation of F, radians per unit sigma
  double operator()(double s) const { return std::abs(s) >= 1.0 ? 0.0 : F(std::abs(s)); }
};

Multiplier zero_multiplier();
// e^{-s^2 / (2 w^2)} cut off at |s| = 1; F(alpha P) is the heat kernel at t = alpha^2 / (2 w^2).
Multiplier gaussian_multiplier(double width = 0.15);
// (1 - s^2)^m, in H^s for s < m + 1/2.
Multiplier polynomial_multiplier(int m = 3);
// Smooth bump times a lacunary cosine series with coefficients 2^{-k s'} g_k,
// g_k standard normal from the seed; in H^s for every s < s'.
Multiplier rough_multiplier(double s_prime = 1.6, int levels = 12, std::uint64_t seed = 3);
// Equal to 1 on [0, a], C^∞ step down to 0 at 1.
Multiplier plateau_multiplier(double a = 0.5);
// "zero", "gaussian[:w=..]", "poly[:m=..]", "plateau[:a=..]", "bump[:s=..][,levels=..][,seed=..]".
Multiplier multiplier_from_name(const std::string& spec);

// F on count uniform samples of [0, 1].
std::vector<double> sample_multiplier(const Multiplier& F, std::size_t count);

struct SobolevReport {
  double norm = 0.0;          // ((1/2pi) ∫ (1 + xi^2)^s |F^(xi)|^2 dxi)^{1/2}
  double l2_samples = 0.0;    // ∫ |F|^2 by the trapezoid rule
  double l2_fourier = 0.0;    // (1/2pi) ∫ |F^|^2 from the same samples
};
// Discrete Fourier weights on count samples of [0, 1], zero padded by pad.
SobolevReport sobolev_norm(const Multiplier& F, double s, std::size_t count = 16385, std::size_t pad = 8);

struct MultiplierKernelOptions {
  // Samples of F on [0, 1]; 0 picks the smallest count passing the Nyquist check, at least 16385.
  std::size_t samples = 0;
};

// K_alpha(r) = ∫_0^∞ F(alpha sigma) dE(sigma, r) dsigma via the functional calculus:
// (1/pi) D^k applied to the cosine transform of F(alpha .), the transforms taken
// by spline Filon quadrature on the samples of F.
RadialProfile multiplier_kernel(int n, const Multiplier& F, double alpha, const std::vector<double>& r,
                                const MultiplierKernelOptions& options = {});

// Same kernel straight from the spectral integral with adaptive Gauss-Kronrod.
double multiplier_kernel_spectral(int n, const Multiplier& F, double alpha, double r, double tol = 1e-11);

// Sine transform S(w) = ∫_0^1 s F(s) sin(w s) ds on w_k = k pi / L, by a padded DST.
struct FarDiagonalTable {
  double d_omega = 0.0;
  std::vector<double> S;  // S[k] at omega = k d_omega
};
FarDiagonalTable far_diagonal_table(const Multiplier& F, double omega_max, std::size_t pad = 32);

// n = 2: (∫_1^{r_max} |K_alpha(r)|^2 sinh^2 r dr)^{1/2}
//      = ((1 / (4 pi^4 alpha^3)) ∫_{1/alpha}^{r_max/alpha} S(w)^2 dw)^{1/2}.
double far_diagonal_norm(const FarDiagonalTable& table, double alpha, double r_max = 40.0);
double far_diagonal_norm(const Multiplier& F, double alpha, double r_max = 40.0);

}  // namespace hypspec
