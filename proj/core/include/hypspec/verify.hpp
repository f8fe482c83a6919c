#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypspec/multiplier.hpp"
#include "hypspec/slope_fit.hpp"
#include "hypspec/transform.hpp"

namespace hypspec {

enum class Regime { low, high };
// near: d <= 1, far: d >= 1.
enum class Zone { near, far };

std::string to_string(Regime regime);
std::string to_string(Zone zone);

struct BoundCheckReport {
  std::string label;
  int n = 2;
  int j = 0;
  double sigma_lo = 0.0, sigma_hi = 0.0;
  double r_lo = 0.0, r_hi = 0.0;
  std::vector<std::size_t> grid_sizes;  // points per axis at each refinement level
  double sup_ratio = 0.0;
  double argmax_sigma = 0.0;
  double argmax_r = 0.0;
  std::vector<double> refinement_deltas;
  bool passed = false;
};

struct BoundCheckOptions {
  std::size_t base_count = 40;  // per axis, log-spaced
  int refinements = 3;          // grid doublings after the base grid
  double envelope_scale = 1.0;  // the constant C the envelope is multiplied by
  double far_r_max = 30.0;
  double near_r_min = 1e-4;
  double low_sigma_min = 1e-3;
};

// Constant-free envelopes of |(d/dsigma)^j dE(sigma, d)|:
//   low:  sigma^2 (d <= 1),  sigma^2 d (1 + sigma d)^{-1} e^{-nd/2} (d >= 1)
//   high: sigma^{n-j} (1 + d sigma)^{-n/2+j} (d <= 1),  sigma^{n/2} d^j e^{-nd/2} (d >= 1)
// At d = 1 both formulas apply and the larger is used.
double pointwise_envelope(int n, Regime regime, int j, double sigma, double d);

// Sup of |kernel| / envelope over a (sigma, r) grid in the given regime and zone,
// recomputed under successive grid doubling. Low regime: sigma in (0, 1], j = 0 only;
// high regime: sigma in [1, 100], j in {0, 1, 2}.
BoundCheckReport check_pointwise_bound(int n, Regime regime, int j, Zone zone, const BoundCheckOptions& options = {});
std::vector<BoundCheckReport> check_pointwise_bounds(int n, Regime regime, const std::vector<int>& js,
                                                     const BoundCheckOptions& options = {});

// Generic grid sup of |value| / envelope with refinement; used by the checks above.
BoundCheckReport grid_sup_ratio(const std::string& label, const std::function<double(double, double)>& value,
                                const std::function<double(double, double)>& envelope, double sigma_lo,
                                double sigma_hi, double r_lo, double r_hi, const BoundCheckOptions& options);

// sup_r |dE(sigma, r)|, the L^1 -> L^inf norm of dE(sigma), including the r -> 0 limit.
double l1_linf_norm(int n, double sigma);

struct RestrictionReport {
  int n = 2;
  std::vector<double> sigma;
  std::vector<double> norms;
  SlopeFit fit;
  double target_exponent = 0.0;
  double tolerance = 0.05;
  bool passed = false;
};

RestrictionReport restriction_scan(int n, const std::vector<double>& sigma, double tolerance = 0.05);

// sup over sigma in [sigma_lo, sigma_hi], r in [1e-4, 30] of |(d/dsigma)^j dE| / sigma.
BoundCheckReport deriv_bound_check(int n, int j, double sigma_lo = 1.0, double sigma_hi = 100.0,
                                   const BoundCheckOptions& options = {});

struct KunzeSteinReport {
  double q = 0.0;
  int n = 2;
  double integral = 0.0;   // ∫ (sinh r)^n (1 + r) e^{-nr/2} |kappa|^{q/2} dr
  double bound = 0.0;      // integral^{2/q}, +inf when divergent
  double tail_rate = 0.0;  // fitted exponential rate of the integrand near r_max
  bool divergent = false;
};

// C_q is taken as 1. Divergence is declared when the integrand's fitted
// exponential rate over [3 r_max / 4, r_max] is not below -1e-3.
KunzeSteinReport kunze_stein_bound(const std::function<double(double)>& kappa, int n, double q, double r_max = 60.0);
// Profile version: kappa linearly interpolated on its grid, r_max = last grid point.
KunzeSteinReport kunze_stein_bound(const RadialProfile& kappa, double q);

// max over the test functions of ||kappa * f||_q / ||f||_{q'} on H^3, with the
// convolution evaluated by direct quadrature at rho_count points of [0, rho_max].
double kunze_stein_empirical_ratio(const std::function<double(double)>& kappa, double q,
                                   const std::vector<std::function<double(double)>>& tests, double rho_max = 20.0,
                                   std::size_t rho_count = 41);

struct UniformityReport {
  std::string multiplier;
  std::vector<double> alphas;
  std::vector<double> norms;
  double max_min_ratio = 1.0;
  SlopeFit trend;  // log norm vs log(1/alpha)
  double trend_slope = 0.0;
  bool bounded = false;
  bool passed = false;  // max_min_ratio < 10 and trend_slope <= 0.02
};

UniformityReport multiplier_uniformity(const Multiplier& F, const std::vector<double>& alphas, double r_max = 40.0);

struct PositivityReport {
  std::size_t points = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool passed = false;  // min >= -1e-10 max
};

// Gram matrix K(d(z_i, z_j)) of the kernel of F(alpha P) on H^3 at random points;
// F >= 0 makes it positive semidefinite.
PositivityReport positivity_witness(const Multiplier& F, double alpha, std::size_t points = 64,
                                    std::uint64_t seed = 5);

}  // namespace hypspec
