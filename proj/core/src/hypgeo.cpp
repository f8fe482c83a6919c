#include "hypspec/hypgeo.hpp"

#include <cmath>
#include <numbers>

#include "hypspec/errors.hpp"

namespace hypspec {
namespace {

void require_positive_x(const HalfSpacePoint& p, const char* what) {
  if (!(p.x > 0.0)) throw DomainError(std::string(what) + ": x-coordinate must be positive");
}

double squared_separation(const PointPair& pair) {
  if (pair.p.y.size() != pair.q.y.size()) throw ContractError("points have different dimensions");
  const double dx = pair.p.x - pair.q.x;
  double s = dx * dx;
  for (std::size_t i = 0; i < pair.p.y.size(); ++i) {
    const double d = pair.p.y[i] - pair.q.y[i];
    s += d * d;
  }
  return s;
}

}  // namespace

HalfSpaceMetric::HalfSpaceMetric(int n, Evaluator g0, double support_radius, std::string description)
    : n_(n), g0_(std::move(g0)), support_radius_(support_radius), description_(std::move(description)) {
  if (n < 1) throw ContractError("metric needs n >= 1");
  if (support_radius < 0.0) throw ContractError("support radius must be nonnegative");
}

MetricSample HalfSpaceMetric::evaluate(double x, std::span<const double> y) const {
  if (static_cast<int>(y.size()) != n_) throw ContractError("y has wrong dimension for metric");
  return g0_(x, y);
}

InverseMetricSample HalfSpaceMetric::inverse(double x, std::span<const double> y) const {
  const MetricSample s = evaluate(x, y);
  InverseMetricSample out;
  out.h = s.g0.inverse();
  out.dh_dx = -out.h * s.dg0_dx * out.h;
  out.dh_dy.reserve(s.dg0_dy.size());
  for (const auto& d : s.dg0_dy) out.dh_dy.push_back(-out.h * d * out.h);
  return out;
}

HalfSpaceMetric exact_hyperbolic(int n) {
  auto eval = [n](double, std::span<const double>) {
    MetricSample s;
    s.g0 = Eigen::MatrixXd::Identity(n, n);
    s.dg0_dx = Eigen::MatrixXd::Zero(n, n);
    s.dg0_dy.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    return s;
  };
  return HalfSpaceMetric(n, eval, 0.0, "hyperbolic");
}

HalfSpaceMetric conformal_bump(int n, const BumpParams& params) {
  if (!(params.amplitude > -1.0)) throw ContractError("bump amplitude must exceed -1");
  if (!(params.radius > 0.0)) throw ContractError("bump radius must be positive");
  std::vector<double> center = params.center;
  if (center.empty()) {
    center.assign(static_cast<std::size_t>(n) + 1, 0.0);
    center[0] = 0.5;
  }
  if (static_cast<int>(center.size()) != n + 1) throw ContractError("bump center needs n + 1 coordinates");

  const double amplitude = params.amplitude;
  const double radius = params.radius;
  double center_norm = 0.0;
  for (double c : center) center_norm += c * c;
  const double support = amplitude == 0.0 ? 0.0 : std::sqrt(center_norm) + radius;

  auto eval = [n, amplitude, radius, center](double x, std::span<const double> y) {
    const auto nn = static_cast<std::size_t>(n);
    std::vector<double> offset(nn + 1);
    offset[0] = x - center[0];
    for (std::size_t i = 0; i < nn; ++i) offset[i + 1] = y[i] - center[i + 1];
    double rho2 = 0.0;
    for (double o : offset) rho2 += o * o;
    const double q = rho2 / (radius * radius);

    double beta = 0.0;
    double dbeta_dq = 0.0;
    if (q < 1.0) {
      beta = std::exp(1.0 - 1.0 / (1.0 - q));
      dbeta_dq = -beta / ((1.0 - q) * (1.0 - q));
    }
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    MetricSample s;
    s.g0 = (1.0 + amplitude * beta) * id;
    const double scale = amplitude * dbeta_dq * 2.0 / (radius * radius);
    s.dg0_dx = scale * offset[0] * id;
    s.dg0_dy.reserve(nn);
    for (std::size_t i = 0; i < nn; ++i) s.dg0_dy.push_back(scale * offset[i + 1] * id);
    return s;
  };
  return HalfSpaceMetric(n, eval, support, "perturbed");
}

WarpedMetric::WarpedMetric(int n, Warp f, double asymptotic_constant, std::string description)
    : n_(n), f_(std::move(f)), asymptotic_constant_(asymptotic_constant), description_(std::move(description)) {
  if (n < 1) throw ContractError("warped metric needs n >= 1");
}

WarpValue WarpedMetric::warp(double r) const {
  if (!(r > 0.0)) throw DomainError("warp evaluated at r <= 0");
  return f_(r);
}

double WarpedMetric::radial_curvature(double r) const {
  const auto w = warp(r);
  return -w.d2f / w.f;
}

WarpedMetric warp_sinh(int n) {
  return WarpedMetric(
      n, [](double r) { return WarpValue{std::sinh(r), std::cosh(r), std::sinh(r)}; }, 1.0, "sinh");
}

WarpedMetric warp_sinh_plus_gaussian(int n) {
  auto f = [](double r) {
    const double g = std::exp(-r * r);
    const double r2 = r * r;
    // (r^3 e^{-r^2})' = (3r^2 - 2r^4) e^{-r^2}, '' = (6r - 14r^3 + 4r^5) e^{-r^2}
    return WarpValue{std::sinh(r) + r2 * r * g, std::cosh(r) + (3.0 * r2 - 2.0 * r2 * r2) * g,
                     std::sinh(r) + (6.0 * r - 14.0 * r2 * r + 4.0 * r2 * r2 * r) * g};
  };
  return WarpedMetric(n, f, 1.0, "sinh_plus_gaussian");
}

double hyperbolic_distance(const PointPair& pair) {
  require_positive_x(pair.p, "hyperbolic_distance");
  require_positive_x(pair.q, "hyperbolic_distance");
  // cosh d - 1 = 2 sinh^2(d/2) = |z - z'|^2 / (2 x x')
  const double s2 = squared_separation(pair);
  return 2.0 * std::asinh(std::sqrt(s2 / (4.0 * pair.p.x * pair.q.x)));
}

BoundaryDefiningTriple bdf_eval(const PointPair& pair) {
  require_positive_x(pair.p, "bdf_eval");
  require_positive_x(pair.q, "bdf_eval");
  double dy2 = 0.0;
  for (std::size_t i = 0; i < pair.p.y.size(); ++i) {
    const double d = pair.p.y[i] - pair.q.y[i];
    dy2 += d * d;
  }
  const double rho_f = std::sqrt(pair.p.x * pair.p.x + pair.q.x * pair.q.x + dy2);
  return {pair.p.x / rho_f, pair.q.x / rho_f, rho_f};
}

double distance_defect(const PointPair& pair) {
  const double d = hyperbolic_distance(pair);
  const auto rho = bdf_eval(pair);
  return d + std::log(rho.rho_L) + std::log(rho.rho_R);
}

double warped_volume_density(const WarpedMetric& metric, double r) {
  if (!(r > 0.0)) throw DomainError("warped_volume_density needs r > 0");
  const double ratio = metric.warp(r).f / std::sinh(r);
  return std::pow(ratio, metric.n());
}

}  // namespace hypspec
