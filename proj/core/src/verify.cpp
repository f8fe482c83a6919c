#include "hypspec/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/hypgeo.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/parallel.hpp"

namespace hypspec {

namespace {

constexpr double pi = std::numbers::pi;

double near_envelope(int n, Regime regime, int j, double sigma, double d) {
  if (regime == Regime::low) return sigma * sigma;
  return std::pow(sigma, n - j) * std::pow(1.0 + d * sigma, -0.5 * n + j);
}

double far_envelope(int n, Regime regime, int j, double sigma, double d) {
  const double decay = std::exp(-0.5 * n * d);
  if (regime == Regime::low) return sigma * sigma * d / (1.0 + sigma * d) * decay;
  return std::pow(sigma, 0.5 * n) * std::pow(d, j) * decay;
}

struct GridSup {
  double value = 0.0;
  double sigma = 0.0;
  double r = 0.0;
};

GridSup sup_on_grid(const std::vector<double>& sigmas, const std::vector<double>& rs,
                    const std::function<double(double, double)>& value,
                    const std::function<double(double, double)>& envelope) {
  std::vector<GridSup> rows(sigmas.size());
  parallel_for(sigmas.size(), [&](std::size_t i) {
    GridSup best;
    best.sigma = sigmas[i];
    best.r = rs.front();
    for (double r : rs) {
      const double ratio = std::abs(value(sigmas[i], r)) / envelope(sigmas[i], r);
      if (!std::isfinite(ratio)) {
        best = {std::numeric_limits<double>::infinity(), sigmas[i], r};
        break;
      }
      if (ratio > best.value) best = {ratio, sigmas[i], r};
    }
    rows[i] = best;
  });
  GridSup out = rows.front();
  for (const auto& row : rows) {
    if (row.value > out.value) out = row;
  }
  return out;
}

void check_regime(Regime regime, int j) {
  if (regime == Regime::low && j != 0) throw ContractError("low-energy bounds are checked for j = 0 only");
  if (regime == Regime::high && (j < 0 || j > 2)) throw ContractError("high-energy bounds need j in {0, 1, 2}");
}

}  // namespace

std::string to_string(Regime regime) { return regime == Regime::low ? "low" : "high"; }
std::string to_string(Zone zone) { return zone == Zone::near ? "near" : "far"; }

double pointwise_envelope(int n, Regime regime, int j, double sigma, double d) {
  check_regime(regime, j);
  if (d < 1.0) return near_envelope(n, regime, j, sigma, d);
  if (d > 1.0) return far_envelope(n, regime, j, sigma, d);
  return std::max(near_envelope(n, regime, j, sigma, d), far_envelope(n, regime, j, sigma, d));
}

BoundCheckReport grid_sup_ratio(const std::string& label, const std::function<double(double, double)>& value,
                                const std::function<double(double, double)>& envelope, double sigma_lo,
                                double sigma_hi, double r_lo, double r_hi, const BoundCheckOptions& options) {
  BoundCheckReport report;
  report.label = label;
  report.sigma_lo = sigma_lo;
  report.sigma_hi = sigma_hi;
  report.r_lo = r_lo;
  report.r_hi = r_hi;
  if (options.base_count == 0) throw ContractError("grid_sup_ratio: empty grid");

  const auto scaled = [&](double s, double r) { return options.envelope_scale * envelope(s, r); };
  if (options.base_count == 1) {
    const GridSup g = sup_on_grid({sigma_lo}, {r_lo}, value, scaled);
    report.grid_sizes = {1};
    report.sup_ratio = g.value;
    report.argmax_sigma = g.sigma;
    report.argmax_r = g.r;
    report.passed = false;
    return report;
  }

  std::size_t count = options.base_count;
  double previous = 0.0;
  for (int level = 0; level <= options.refinements; ++level, count *= 2) {
    const GridSup g = sup_on_grid(logspace(sigma_lo, sigma_hi, count), logspace(r_lo, r_hi, count), value, scaled);
    report.grid_sizes.push_back(count);
    if (level > 0) report.refinement_deltas.push_back(std::abs(g.value - previous) / std::abs(g.value));
    previous = g.value;
    report.sup_ratio = g.value;
    report.argmax_sigma = g.sigma;
    report.argmax_r = g.r;
  }
  report.passed = std::isfinite(report.sup_ratio) && !report.refinement_deltas.empty() &&
                  report.refinement_deltas.back() < 0.1;
  return report;
}

BoundCheckReport check_pointwise_bound(int n, Regime regime, int j, Zone zone, const BoundCheckOptions& options) {
  check_regime(regime, j);
  const double s_lo = regime == Regime::low ? options.low_sigma_min : 1.0;
  const double s_hi = regime == Regime::low ? 1.0 : 100.0;
  const double r_lo = zone == Zone::near ? options.near_r_min : 1.0;
  const double r_hi = zone == Zone::near ? 1.0 : options.far_r_max;
  auto value = [n, j](double s, double r) { return spectral_measure_deriv(n, j, s, r); };
  auto envelope = [n, regime, j](double s, double r) { return pointwise_envelope(n, regime, j, s, r); };
  const std::string label = "n=" + std::to_string(n) + " " + to_string(regime) + " j=" + std::to_string(j) + " " +
                            to_string(zone);
  auto report = grid_sup_ratio(label, value, envelope, s_lo, s_hi, r_lo, r_hi, options);
  report.n = n;
  report.j = j;
  return report;
}

std::vector<BoundCheckReport> check_pointwise_bounds(int n, Regime regime, const std::vector<int>& js,
                                                     const BoundCheckOptions& options) {
  std::vector<BoundCheckReport> out;
  for (int j : js) {
    for (Zone zone : {Zone::near, Zone::far}) out.push_back(check_pointwise_bound(n, regime, j, zone, options));
  }
  return out;
}

double l1_linf_norm(int n, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("l1_linf_norm: sigma must be positive");
  double best = std::abs(spectral_measure_at_origin(n, 0, sigma));
  // resolve the oscillation: at least 16 samples per period 2 pi / sigma near the origin
  const double r_hi = 40.0;
  const std::size_t count = 400 + static_cast<std::size_t>(16.0 * sigma * std::log(r_hi / 1e-6) / (2.0 * pi));
  for (double r : logspace(1e-6, r_hi, count)) best = std::max(best, std::abs(spectral_measure(n, sigma, r)));
  return best;
}

RestrictionReport restriction_scan(int n, const std::vector<double>& sigma, double tolerance) {
  RestrictionReport report;
  report.n = n;
  report.sigma = sigma;
  report.tolerance = tolerance;
  report.target_exponent = n;
  report.norms.resize(sigma.size());
  parallel_for(sigma.size(), [&](std::size_t i) { report.norms[i] = l1_linf_norm(n, sigma[i]); });
  report.fit = fit_loglog(report.sigma, report.norms);
  report.passed = std::abs(report.fit.slope - report.target_exponent) <= tolerance;
  return report;
}

BoundCheckReport deriv_bound_check(int n, int j, double sigma_lo, double sigma_hi, const BoundCheckOptions& options) {
  if (j < 1 || j > 6) throw UnsupportedOrderError("deriv_bound_check: j must lie in [1, 6]");
  if (!(sigma_lo >= 1.0) || !(sigma_hi > sigma_lo)) throw ContractError("deriv_bound_check: need 1 <= sigma_lo < sigma_hi");
  auto value = [n, j](double s, double r) { return spectral_measure_deriv(n, j, s, r); };
  auto envelope = [](double s, double) { return s; };
  auto report = grid_sup_ratio("n=" + std::to_string(n) + " deriv j=" + std::to_string(j), value, envelope, sigma_lo,
                               sigma_hi, options.near_r_min, options.far_r_max, options);
  report.n = n;
  report.j = j;
  return report;
}

KunzeSteinReport kunze_stein_bound(const std::function<double(double)>& kappa, int n, double q, double r_max) {
  if (!(q > 2.0)) throw DomainError("kunze_stein_bound: q must exceed 2");
  if (!(r_max > 0.0)) throw DomainError("kunze_stein_bound: r_max must be positive");
  KunzeSteinReport report;
  report.q = q;
  report.n = n;
  auto integrand = [&](double r) {
    return std::pow(std::sinh(r), n) * (1.0 + r) * std::exp(-0.5 * n * r) * std::pow(std::abs(kappa(r)), 0.5 * q);
  };
  using boost::math::quadrature::gauss_kronrod;
  const int pieces = std::max(1, static_cast<int>(std::ceil(r_max / 5.0)));
  for (int i = 0; i < pieces; ++i) {
    const double a = r_max * i / pieces;
    const double b = r_max * (i + 1) / pieces;
    report.integral += gauss_kronrod<double, 31>::integrate(integrand, a, b, 10, 1e-12);
  }

  std::vector<double> xs, ys;
  for (double r : linspace(0.75 * r_max, r_max, 16)) {
    const double v = integrand(r);
    if (v > 0.0 && std::isfinite(v)) {
      xs.push_back(r);
      ys.push_back(std::log(v));
    }
  }
  if (xs.size() >= 8) {
    report.tail_rate = fit_slope(xs, ys).slope;
    report.divergent = !(report.tail_rate < -1e-3);
  } else {
    report.tail_rate = -std::numeric_limits<double>::infinity();
  }
  report.bound = report.divergent ? std::numeric_limits<double>::infinity() : std::pow(report.integral, 2.0 / q);
  return report;
}

KunzeSteinReport kunze_stein_bound(const RadialProfile& kappa, double q) {
  kappa.validate();
  auto interp = [&](double r) {
    const auto& rs = kappa.r;
    if (r <= rs.front()) return kappa.values.front();
    if (r >= rs.back()) return kappa.values.back();
    const auto it = std::upper_bound(rs.begin(), rs.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - rs.begin()) - 1;
    const double w = (r - rs[i]) / (rs[i + 1] - rs[i]);
    return (1.0 - w) * kappa.values[i] + w * kappa.values[i + 1];
  };
  return kunze_stein_bound(interp, kappa.n, q, kappa.r.back());
}

double kunze_stein_empirical_ratio(const std::function<double(double)>& kappa, double q,
                                   const std::vector<std::function<double(double)>>& tests, double rho_max,
                                   std::size_t rho_count) {
  if (!(q > 2.0)) throw DomainError("kunze_stein_empirical_ratio: q must exceed 2");
  if (rho_count < 2) throw ContractError("kunze_stein_empirical_ratio: need at least 2 points");
  using boost::math::quadrature::gauss_kronrod;
  const double qp = q / (q - 1.0);
  const double f_support = 12.0;
  const auto rho = linspace(0.0, rho_max, rho_count);
  double worst = 0.0;
  for (const auto& f : tests) {
    auto fp = [&](double r) { return std::pow(std::abs(f(r)), qp) * std::sinh(r) * std::sinh(r); };
    const double f_norm = std::pow(4.0 * pi * gauss_kronrod<double, 31>::integrate(fp, 0.0, f_support, 10, 1e-12), 1.0 / qp);
    std::vector<double> g(rho_count);
    parallel_for(rho_count, [&](std::size_t i) {
      g[i] = radial_convolve_direct(kappa, f, std::max(rho[i], 1e-3), f_support, 1e-10);
    });
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < rho_count; ++i) {
      const double a = std::pow(std::abs(g[i]), q) * std::sinh(rho[i]) * std::sinh(rho[i]);
      const double b = std::pow(std::abs(g[i + 1]), q) * std::sinh(rho[i + 1]) * std::sinh(rho[i + 1]);
      acc += 0.5 * (a + b) * (rho[i + 1] - rho[i]);
    }
    const double g_norm = std::pow(4.0 * pi * acc, 1.0 / q);
    if (f_norm > 0.0) worst = std::max(worst, g_norm / f_norm);
  }
  return worst;
}

UniformityReport multiplier_uniformity(const Multiplier& F, const std::vector<double>& alphas, double r_max) {
  if (alphas.empty()) throw ContractError("multiplier_uniformity: no alphas");
  UniformityReport report;
  report.multiplier = F.name;
  report.alphas = alphas;
  const double alpha_min = *std::min_element(alphas.begin(), alphas.end());
  if (!(alpha_min > 0.0)) throw DomainError("multiplier_uniformity: alphas must be positive");
  const auto table = far_diagonal_table(F, r_max / alpha_min);
  for (double a : alphas) report.norms.push_back(far_diagonal_norm(table, a, r_max));

  const double hi = *std::max_element(report.norms.begin(), report.norms.end());
  const double lo = *std::min_element(report.norms.begin(), report.norms.end());
  report.bounded = std::isfinite(hi);
  if (hi == 0.0) {
    report.max_min_ratio = 1.0;
    report.trend_slope = 0.0;
  } else {
    report.max_min_ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (alphas.size() >= 8 && lo > 0.0) {
      std::vector<double> inv(alphas.size());
      for (std::size_t i = 0; i < alphas.size(); ++i) inv[i] = 1.0 / alphas[i];
      report.trend = fit_loglog(inv, report.norms);
      report.trend_slope = report.trend.slope;
    }
  }
  report.passed = report.bounded && report.max_min_ratio < 10.0 && report.trend_slope <= 0.02;
  return report;
}

PositivityReport positivity_witness(const Multiplier& F, double alpha, std::size_t points, std::uint64_t seed) {
  if (points < 2) throw ContractError("positivity_witness: need at least 2 points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logx(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> yy(-2.0, 2.0);
  std::vector<HalfSpacePoint> z(points);
  for (auto& p : z) {
    p.x = std::exp(logx(rng));
    p.y = {yy(rng), yy(rng)};
  }
  const std::size_t pairs = points * (points + 1) / 2;
  std::vector<double> entries(pairs);
  parallel_for(pairs, [&](std::size_t idx) {
    // idx enumerates (i, j) with j <= i row by row
    std::size_t i = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(idx) + 1.0) - 1.0) / 2.0);
    while (i * (i + 1) / 2 > idx) --i;
    while ((i + 1) * (i + 2) / 2 <= idx) ++i;
    const std::size_t j = idx - i * (i + 1) / 2;
    const double d = i == j ? 0.0 : hyperbolic_distance({z[i], z[j]});
    entries[idx] = multiplier_kernel_spectral(2, F, alpha, std::max(d, 1e-13));
  });
  Eigen::MatrixXd gram(points, points);
  for (std::size_t i = 0, idx = 0; i < points; ++i) {
    for (std::size_t j = 0; j <= i; ++j, ++idx) {
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[idx];
      gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = entries[idx];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  PositivityReport report;
  report.points = points;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.max_eigenvalue = solver.eigenvalues().maxCoeff();
  report.passed = report.min_eigenvalue >= -1e-10 * std::abs(report.max_eigenvalue);
  return report;
}

}  // namespace hypspec
