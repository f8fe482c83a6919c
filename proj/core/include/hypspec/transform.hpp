#pragma once

#include <functional>
#include <vector>

namespace hypspec {

// Radial function on H^3 sampled on strictly increasing r > 0.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> values;
  int n = 2;

  static RadialProfile sample(const std::vector<double>& r, const std::function<double(double)>& f, int n = 2);
  void validate() const;
};

// Spherical transform samples on a uniform grid sigma_j = j * d_sigma, j = 0..M-1.
struct SpectralProfile {
  std::vector<double> sigma;
  std::vector<double> values;
};

struct TransformOptions {
  double sigma_max = 64.0;
  std::size_t sigma_count = 8192;
  // Require |kappa| sinh r to have decayed below tail_tolerance (relative to
  // its maximum) over the last 5% of the grid.
  bool check_tail = true;
  double tail_tolerance = 1e-6;
};

// Default grid: 4096 log-spaced points on [1e-3, 40].
std::vector<double> default_radial_grid(std::size_t count = 4096, double r_max = 40.0);

// phi_sigma(r) = sin(sigma r) / (sigma sinh r), with phi_sigma(0) = 1.
double spherical_function_h3(double sigma, double r);

// kappa_hat(sigma) = 4 pi ∫_0^∞ kappa(r) phi_sigma(r) sinh^2 r dr.
SpectralProfile spherical_transform_h3(const RadialProfile& kappa, const TransformOptions& options = {});

// kappa(r) = (1 / (2 pi^2)) ∫_0^∞ kappa_hat(sigma) phi_sigma(r) sigma^2 dsigma, truncated at the
// end of the sigma grid.
RadialProfile inverse_spherical_transform_h3(const SpectralProfile& spectrum, const std::vector<double>& r);

// k1 * k2 by transform, multiply, invert; evaluated on out_r (k1's grid when empty).
RadialProfile radial_convolve(const RadialProfile& k1, const RadialProfile& k2, const TransformOptions& options = {},
                              const std::vector<double>& out_r = {});

// Definition-level convolution of radial functions on H^3:
// (k1 * k2)(rho) = (2 pi / sinh rho) ∫_0^{r_max} k2(r) sinh r ∫_{|rho-r|}^{rho+r} k1(s) sinh s ds dr.
double radial_convolve_direct(const std::function<double(double)>& k1, const std::function<double(double)>& k2,
                              double rho, double r_max, double tol = 1e-12);

// (4 pi ∫ |kappa|^2 sinh^2 r dr)^{1/2} by the trapezoid rule on the profile grid.
double l2_norm_h3(const RadialProfile& kappa);
double l2_distance_h3(const RadialProfile& a, const RadialProfile& b);

}  // namespace hypspec
