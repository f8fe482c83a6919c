#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hypspec {

// A point of the half-space model {x > 0} x R^n.
struct HalfSpacePoint {
  double x = 1.0;
  std::vector<double> y;
};

struct PointPair {
  HalfSpacePoint p;
  HalfSpacePoint q;
};

// Boundary metric g0(x, y) and its first derivatives at one point.
struct MetricSample {
  Eigen::MatrixXd g0;
  Eigen::MatrixXd dg0_dx;
  std::vector<Eigen::MatrixXd> dg0_dy;  // one matrix per y_i
};

// h = g0^{-1} and its derivatives, the form the Hamiltonian flow consumes.
struct InverseMetricSample {
  Eigen::MatrixXd h;
  Eigen::MatrixXd dh_dx;
  std::vector<Eigen::MatrixXd> dh_dy;
};

// Metric (dx^2 + g0(x, y; dy)) / x^2 on the half space, n = dim of y.
// g0 is the identity outside the Euclidean ball |(x, y)| <= support_radius.
class HalfSpaceMetric {
 public:
  using Evaluator = std::function<MetricSample(double x, std::span<const double> y)>;

  HalfSpaceMetric(int n, Evaluator g0, double support_radius, std::string description);

  int n() const noexcept { return n_; }
  double support_radius() const noexcept { return support_radius_; }
  const std::string& description() const noexcept { return description_; }
  bool is_exact_hyperbolic() const noexcept { return support_radius_ == 0.0; }

  MetricSample evaluate(double x, std::span<const double> y) const;
  InverseMetricSample inverse(double x, std::span<const double> y) const;

 private:
  int n_;
  Evaluator g0_;
  double support_radius_;
  std::string description_;
};

HalfSpaceMetric exact_hyperbolic(int n);

// Conformal bump g0 = (1 + amplitude * beta) I with beta a C^infinity bump of
// the given radius centred at `center` = (x_c, y_c...) in half-space coordinates,
// normalised so beta(center) = 1. Requires amplitude > -1.
struct BumpParams {
  double amplitude = 0.05;
  std::vector<double> center;  // n + 1 entries; empty means (0.5, 0, ..., 0)
  double radius = 0.5;
};

HalfSpaceMetric conformal_bump(int n, const BumpParams& params);

// Rotationally symmetric model dr^2 + f(r)^2 dω^2 on R^{n+1}.
struct WarpValue {
  double f;
  double df;
  double d2f;
};

class WarpedMetric {
 public:
  using Warp = std::function<WarpValue(double r)>;

  WarpedMetric(int n, Warp f, double asymptotic_constant, std::string description);

  int n() const noexcept { return n_; }
  double asymptotic_constant() const noexcept { return asymptotic_constant_; }
  const std::string& description() const noexcept { return description_; }
  WarpValue warp(double r) const;
  // Radial sectional curvature -f''/f.
  double radial_curvature(double r) const;

 private:
  int n_;
  Warp f_;
  double asymptotic_constant_;
  std::string description_;
};

WarpedMetric warp_sinh(int n);
// sinh r + r^3 exp(-r^2): same asymptotics as sinh, smooth pole at r = 0.
WarpedMetric warp_sinh_plus_gaussian(int n);

// Concrete boundary defining functions for the blown-up double space.
struct BoundaryDefiningTriple {
  double rho_L;
  double rho_R;
  double rho_F;
};

double hyperbolic_distance(const PointPair& pair);
BoundaryDefiningTriple bdf_eval(const PointPair& pair);
// b(z, z') = d(z, z') + log(rho_L rho_R).
double distance_defect(const PointPair& pair);
// m(r) = (f(r) / sinh r)^n, the density of the Riemannian measure against (sinh r)^n dr dω.
double warped_volume_density(const WarpedMetric& metric, double r);

}  // namespace hypspec
