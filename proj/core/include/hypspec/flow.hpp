#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypspec/hypgeo.hpp"

namespace hypspec {

// State of the 0-geodesic flow. (lam, mu) are the fibre coordinates of the
// covector lam dx/x + mu . dy/x; lam is unrelated to the spectral parameter.
struct ZeroPhasePoint {
  double x = 1.0;
  std::vector<double> y;
  double lam = 0.0;
  std::vector<double> mu;

  int n() const noexcept { return static_cast<int>(y.size()); }
  // Layout: x, y_1..y_n, lam, mu_1..mu_n.
  std::vector<double> pack() const;
  static ZeroPhasePoint unpack(std::span<const double> packed);
};

struct PhaseTangent {
  double dx = 0.0;
  std::vector<double> dy;
  double dlam = 0.0;
  std::vector<double> dmu;
};

// Hamilton's equations for H = (lam^2 + h^{ij} mu_i mu_j) / 2, h = g0^{-1}:
//   x' = x lam, y' = x h mu, lam' = -(h + x dh/dx / 2)(mu, mu),
//   mu_i' = lam mu_i - x (dh/dy_i)(mu, mu) / 2.
PhaseTangent geodesic_rhs(const HalfSpaceMetric& metric, const ZeroPhasePoint& state);

// Same equations restricted to the boundary {x = 0}: x' = y' = 0,
// lam' = -h(0, y)(mu, mu), mu' = lam mu.
PhaseTangent boundary_rhs(const HalfSpaceMetric& metric, const ZeroPhasePoint& state);

// lam^2 + h^{ij}(x, y) mu_i mu_j, equal to 1 on the unit cosphere.
double cosphere_norm(const HalfSpaceMetric& metric, const ZeroPhasePoint& state);
ZeroPhasePoint normalize_to_cosphere(const HalfSpaceMetric& metric, ZeroPhasePoint state);

struct TrajectorySample {
  double t;
  ZeroPhasePoint state;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool exit_forward = false;
  bool exit_backward = false;
  std::optional<double> exit_time;
  double max_constraint_drift = 0.0;
  std::size_t steps = 0;

  const ZeroPhasePoint& final_state() const { return samples.back().state; }
};

struct IntegrateOptions {
  double tol = 1e-10;
  // Dense-output sample times (must lie between 0 and t_end). Empty: record the
  // start, every accepted step and the end point.
  std::vector<double> sample_times;
  // Stop as soon as x < escape_x, or |(x, y)| > 1 / escape_x.
  std::optional<double> escape_x;
  std::size_t max_steps = 2'000'000;
};

// Integrates from t = 0 to t_end (t_end < 0 integrates backward). The start is
// renormalised onto the cosphere; it is not renormalised again mid-flight.
Trajectory integrate(const HalfSpaceMetric& metric, const ZeroPhasePoint& start, double t_end,
                     const IntegrateOptions& options = {});

// Boundary bicharacteristic in the time variable tau with d tau / dt = sin tau:
// x = 0, y = y_star, lam = cos tau, mu = sin tau * mu_star.
ZeroPhasePoint boundary_bicharacteristic(double tau, std::span<const double> y_star,
                                         std::span<const double> mu_star);

// ∫_0^∞ (2 e^{αt} / (1 + e^{2αt}))^{1 + 1/α} dt; equals 1 at α = 1.
double y_travel_integral(double alpha);

struct YTravelReport {
  double max_y_displacement = 0.0;
  double bound_ratio = 0.0;  // max displacement / (2 x_max)
  double max_x_reached = 0.0;
  std::size_t geodesics = 0;
};

struct YTravelOptions {
  std::size_t directions = 8;
  std::vector<std::vector<double>> base_points;  // apex y-positions; default {0}
  double tol = 1e-11;
  std::uint64_t seed = 7;
};

// Integrates geodesics whose apex sits at x = x_max and measures the total
// y-displacement (in the boundary metric h(0)) between both ends.
YTravelReport y_travel_check(const HalfSpaceMetric& metric, double epsilon, double x_max,
                             const YTravelOptions& options = {});

// Largest value of lam(t) + tanh(t) on [0, t_max] over geodesics started with
// lam(0) = 0 at the given points; the flow inequality predicts <= 0.
double lambda_inequality_violation(const HalfSpaceMetric& metric, std::span<const ZeroPhasePoint> starts,
                                   double t_max, double tol);

enum class EscapeStatus { escaped, trapped, inconclusive };

struct EscapeRecord {
  ZeroPhasePoint start;
  EscapeStatus status = EscapeStatus::trapped;
  std::optional<double> forward_time;
  std::optional<double> backward_time;
};

struct NontrapOptions {
  std::size_t samples = 1000;
  double escape_x = 1e-3;
  double t_max = 100.0;
  double box = 1.0;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

struct NontrapReport {
  bool passed = false;
  std::size_t trapped_count = 0;
  std::size_t inconclusive_count = 0;
  double worst_escape_time = 0.0;
  std::uint64_t seed = 0;
  std::vector<EscapeRecord> records;
};

NontrapReport certify_nontrapping(const HalfSpaceMetric& metric, const NontrapOptions& options);

struct ShootOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 60;
  // Extra randomly perturbed seeds; used to detect several connecting geodesics.
  std::size_t extra_seeds = 0;
  // Multiplies the hyperbolic seed vector; 1 means the exact-hyperbolic answer.
  double seed_scale = 1.0;
  // Relative Gaussian perturbation of the primary seed, drawn from rng_seed.
  double seed_jitter = 0.0;
  std::uint64_t rng_seed = 11;
};

struct ShootResult {
  double distance = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::size_t multiplicity = 1;
  ZeroPhasePoint initial_direction;
};

ShootResult shoot_geodesic(const HalfSpaceMetric& metric, const PointPair& pair, const ShootOptions& options = {});
double shoot_distance(const HalfSpaceMetric& metric, const PointPair& pair, double tol = 1e-10);

// Unit initial covector of the exact hyperbolic geodesic from pair.p to pair.q.
ZeroPhasePoint hyperbolic_initial_direction(const PointPair& pair);

}  // namespace hypspec
