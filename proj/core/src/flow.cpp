#include "hypspec/flow.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hypspec/errors.hpp"
#include "hypspec/parallel.hpp"

namespace hypspec {
namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<double>;

void packed_rhs(const HalfSpaceMetric& metric, const State& s, State& ds) {
  const int n = metric.n();
  const auto nn = static_cast<std::size_t>(n);
  const double x = s[0];
  if (!(x > 0.0)) throw DomainError("geodesic left the chart (x <= 0)");
  const double lam = s[nn + 1];
  Eigen::Map<const Eigen::VectorXd> mu(s.data() + nn + 2, n);

  if (metric.is_exact_hyperbolic()) {
    ds[0] = x * lam;
    for (std::size_t i = 0; i < nn; ++i) {
      ds[1 + i] = x * mu[static_cast<Eigen::Index>(i)];
      ds[nn + 2 + i] = lam * mu[static_cast<Eigen::Index>(i)];
    }
    ds[nn + 1] = -mu.squaredNorm();
    return;
  }

  const auto inv = metric.inverse(x, std::span<const double>(s.data() + 1, nn));
  const Eigen::VectorXd hmu = inv.h * mu;
  ds[0] = x * lam;
  for (std::size_t i = 0; i < nn; ++i) ds[1 + i] = x * hmu[static_cast<Eigen::Index>(i)];
  ds[nn + 1] = -(mu.dot(hmu) + 0.5 * x * mu.dot(inv.dh_dx * mu));
  for (std::size_t i = 0; i < nn; ++i) {
    ds[nn + 2 + i] = lam * mu[static_cast<Eigen::Index>(i)] - 0.5 * x * mu.dot(inv.dh_dy[i] * mu);
  }
}

double packed_norm(const HalfSpaceMetric& metric, const State& s) {
  const int n = metric.n();
  const auto nn = static_cast<std::size_t>(n);
  Eigen::Map<const Eigen::VectorXd> mu(s.data() + nn + 2, n);
  const double lam = s[nn + 1];
  if (metric.is_exact_hyperbolic()) return lam * lam + mu.squaredNorm();
  const auto g = metric.evaluate(s[0], std::span<const double>(s.data() + 1, nn));
  return lam * lam + mu.dot(g.g0.ldlt().solve(mu));
}

bool escaped(const State& s, std::size_t n, double escape_x) {
  if (s[0] < escape_x) return true;
  double r2 = s[0] * s[0];
  for (std::size_t i = 0; i < n; ++i) r2 += s[1 + i] * s[1 + i];
  return r2 > 1.0 / (escape_x * escape_x);
}

PhaseTangent unpack_tangent(const State& ds, std::size_t n) {
  PhaseTangent t;
  t.dx = ds[0];
  t.dy.assign(ds.begin() + 1, ds.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  t.dlam = ds[n + 1];
  t.dmu.assign(ds.begin() + static_cast<std::ptrdiff_t>(n) + 2, ds.end());
  return t;
}

void check_dimensions(const HalfSpaceMetric& metric, const ZeroPhasePoint& s) {
  if (s.n() != metric.n() || s.mu.size() != s.y.size()) {
    throw ContractError("phase point dimension does not match metric");
  }
}

// Unit vector in the h(x, y)-norm: mu = L nu with g0 = L L^T.
std::vector<double> mu_from_unit(const HalfSpaceMetric& metric, double x, std::span<const double> y,
                                 const Eigen::VectorXd& nu) {
  const auto g = metric.evaluate(x, y);
  const Eigen::MatrixXd l = g.g0.llt().matrixL();
  const Eigen::VectorXd mu = l * nu;
  return {mu.data(), mu.data() + mu.size()};
}

}  // namespace

std::vector<double> ZeroPhasePoint::pack() const {
  std::vector<double> s;
  s.reserve(2 * y.size() + 2);
  s.push_back(x);
  s.insert(s.end(), y.begin(), y.end());
  s.push_back(lam);
  s.insert(s.end(), mu.begin(), mu.end());
  return s;
}

ZeroPhasePoint ZeroPhasePoint::unpack(std::span<const double> packed) {
  if (packed.size() < 4 || packed.size() % 2 != 0) throw ContractError("packed phase point has bad length");
  const std::size_t n = packed.size() / 2 - 1;
  ZeroPhasePoint p;
  p.x = packed[0];
  p.y.assign(packed.begin() + 1, packed.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  p.lam = packed[n + 1];
  p.mu.assign(packed.begin() + static_cast<std::ptrdiff_t>(n) + 2, packed.end());
  return p;
}

PhaseTangent geodesic_rhs(const HalfSpaceMetric& metric, const ZeroPhasePoint& state) {
  check_dimensions(metric, state);
  if (!(state.x > 0.0)) throw DomainError("geodesic_rhs: x must be positive");
  const State s = state.pack();
  State ds(s.size());
  packed_rhs(metric, s, ds);
  return unpack_tangent(ds, static_cast<std::size_t>(metric.n()));
}

PhaseTangent boundary_rhs(const HalfSpaceMetric& metric, const ZeroPhasePoint& state) {
  check_dimensions(metric, state);
  const auto g = metric.evaluate(0.0, state.y);
  const Eigen::Map<const Eigen::VectorXd> mu(state.mu.data(), metric.n());
  PhaseTangent t;
  t.dx = 0.0;
  t.dy.assign(state.y.size(), 0.0);
  t.dlam = -mu.dot(g.g0.ldlt().solve(mu));
  t.dmu.resize(state.mu.size());
  for (std::size_t i = 0; i < state.mu.size(); ++i) t.dmu[i] = state.lam * state.mu[i];
  return t;
}

double cosphere_norm(const HalfSpaceMetric& metric, const ZeroPhasePoint& state) {
  check_dimensions(metric, state);
  return packed_norm(metric, state.pack());
}

ZeroPhasePoint normalize_to_cosphere(const HalfSpaceMetric& metric, ZeroPhasePoint state) {
  const double norm = cosphere_norm(metric, state);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("cannot normalise a zero covector");
  const double scale = 1.0 / std::sqrt(norm);
  state.lam *= scale;
  for (auto& m : state.mu) m *= scale;
  return state;
}

Trajectory integrate(const HalfSpaceMetric& metric, const ZeroPhasePoint& start, double t_end,
                     const IntegrateOptions& options) {
  check_dimensions(metric, start);
  if (!(options.tol > 0.0)) throw ContractError("integrate: tol must be positive");
  if (!(start.x > 0.0)) throw DomainError("integrate: start must have x > 0");
  const auto n = static_cast<std::size_t>(metric.n());
  const double direction = t_end >= 0.0 ? 1.0 : -1.0;

  std::vector<double> targets = options.sample_times;
  for (double t : targets) {
    if (direction * t < 0.0 || direction * (t - t_end) > 0.0) {
      throw ContractError("sample time outside the integration interval");
    }
  }
  std::sort(targets.begin(), targets.end(), [direction](double a, double b) { return direction * a < direction * b; });
  const bool record_steps = targets.empty();

  Trajectory traj;
  State state = normalize_to_cosphere(metric, start).pack();
  auto record = [&](double t) { traj.samples.push_back({t, ZeroPhasePoint::unpack(state)}); };
  auto track_drift = [&] {
    traj.max_constraint_drift = std::max(traj.max_constraint_drift, std::abs(packed_norm(metric, state) - 1.0));
  };

  std::size_t next_target = 0;
  while (next_target < targets.size() && targets[next_target] == 0.0) {
    record(0.0);
    ++next_target;
  }
  if (record_steps) record(0.0);
  if (t_end == 0.0) return traj;

  auto system = [&metric](const State& s, State& ds, double) { packed_rhs(metric, s, ds); };
  auto stepper = odeint::make_controlled(options.tol, options.tol, odeint::runge_kutta_dopri5<State>());

  double t = 0.0;
  double dt = direction * std::min(1e-2, std::abs(t_end));
  std::size_t rejected_in_row = 0;

  while (direction * (t_end - t) > 0.0) {
    if (traj.steps >= options.max_steps) {
      throw IntegrationError("integrate: step budget exhausted", t, state);
    }
    const double target = next_target < targets.size() ? targets[next_target] : t_end;
    double h = dt;
    bool clamped = false;
    if (direction * (t + h - target) > 0.0) {
      h = target - t;
      clamped = true;
    }
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)) && !clamped) {
      throw IntegrationError("integrate: step size underflow", t, state);
    }

    odeint::controlled_step_result result;
    try {
      result = stepper.try_step(system, state, t, h);
    } catch (const DomainError&) {
      // a trial stage left the chart; retry with a shorter step
      dt = (clamped ? h : dt) * 0.25;
      if (++rejected_in_row > 200) throw IntegrationError("integrate: trajectory left the chart", t, state);
      continue;
    }
    if (result == odeint::fail) {
      dt = h;
      if (++rejected_in_row > 200) throw IntegrationError("integrate: too many rejected steps", t, state);
      continue;
    }
    rejected_in_row = 0;
    ++traj.steps;
    // keep the unclamped step suggestion when we only shortened to hit a target
    dt = clamped ? (direction * h > direction * dt ? h : dt) : h;
    track_drift();

    const bool hit_target = clamped && direction * (t - target) >= 0.0;
    if (hit_target && next_target < targets.size()) {
      t = target;
      record(t);
      ++next_target;
    } else if (record_steps) {
      record(t);
    }

    if (options.escape_x && escaped(state, n, *options.escape_x)) {
      traj.exit_time = t;
      if (direction > 0.0) traj.exit_forward = true;
      else traj.exit_backward = true;
      if (!record_steps && (traj.samples.empty() || traj.samples.back().t != t)) record(t);
      return traj;
    }
  }
  if (!record_steps && (traj.samples.empty() || traj.samples.back().t != t)) record(t);
  return traj;
}

ZeroPhasePoint boundary_bicharacteristic(double tau, std::span<const double> y_star,
                                         std::span<const double> mu_star) {
  if (!(tau > 0.0 && tau < std::numbers::pi)) throw DomainError("boundary_bicharacteristic: tau must lie in (0, pi)");
  if (y_star.size() != mu_star.size()) throw ContractError("y_star and mu_star dimensions differ");
  ZeroPhasePoint p;
  p.x = 0.0;
  p.y.assign(y_star.begin(), y_star.end());
  p.lam = std::cos(tau);
  const double s = std::sin(tau);
  p.mu.reserve(mu_star.size());
  for (double m : mu_star) p.mu.push_back(s * m);
  return p;
}

double y_travel_integral(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("y_travel_integral: alpha must be positive");
  const double power = 1.0 + 1.0 / alpha;
  auto f = [alpha, power](double t) {
    // 2 e^{αt} / (1 + e^{2αt}) = sech(αt)
    return std::pow(1.0 / std::cosh(alpha * t), power);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

YTravelReport y_travel_check(const HalfSpaceMetric& metric, double epsilon, double x_max,
                             const YTravelOptions& options) {
  if (!(x_max > 0.0 && x_max <= epsilon && epsilon <= 0.1)) {
    throw ContractError("y_travel_check needs 0 < x_max <= epsilon <= 0.1");
  }
  const int n = metric.n();
  auto bases = options.base_points;
  if (bases.empty()) bases.emplace_back(static_cast<std::size_t>(n), 0.0);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;

  YTravelReport report;
  IntegrateOptions opts;
  opts.tol = options.tol;
  opts.escape_x = x_max * 1e-8;
  const double horizon = 60.0;

  for (const auto& y0 : bases) {
    if (static_cast<int>(y0.size()) != n) throw ContractError("base point has wrong dimension");
    for (std::size_t k = 0; k < options.directions; ++k) {
      Eigen::VectorXd nu(n);
      for (int i = 0; i < n; ++i) nu[i] = normal(rng);
      nu.normalize();
      ZeroPhasePoint start;
      start.x = x_max;
      start.y = y0;
      start.lam = 0.0;
      start.mu = mu_from_unit(metric, x_max, y0, nu);

      Trajectory fwd, bwd;
      try {
        fwd = integrate(metric, start, horizon, opts);
        bwd = integrate(metric, start, -horizon, opts);
      } catch (const DomainError& e) {
        throw IntegrationError(std::string("y_travel_check: ") + e.what(), 0.0, start.pack());
      }
      for (const auto* traj : {&fwd, &bwd}) {
        if (!traj->exit_time) {
          throw IntegrationError("y_travel_check: geodesic did not approach the boundary", horizon,
                                 traj->final_state().pack());
        }
        for (const auto& s : traj->samples) report.max_x_reached = std::max(report.max_x_reached, s.state.x);
      }
      if (report.max_x_reached > epsilon) {
        throw IntegrationError("y_travel_check: geodesic left the region x <= epsilon", 0.0, start.pack());
      }

      const auto& a = fwd.final_state().y;
      const auto& b = bwd.final_state().y;
      Eigen::VectorXd dy(n);
      std::vector<double> mid(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        dy[i] = a[ui] - b[ui];
        mid[ui] = 0.5 * (a[ui] + b[ui]);
      }
      const auto g = metric.evaluate(0.0, mid);
      const double disp = std::sqrt(dy.dot(g.g0 * dy));
      report.max_y_displacement = std::max(report.max_y_displacement, disp);
      ++report.geodesics;
    }
  }
  report.bound_ratio = report.max_y_displacement / (2.0 * x_max);
  return report;
}

double lambda_inequality_violation(const HalfSpaceMetric& metric, std::span<const ZeroPhasePoint> starts,
                                   double t_max, double tol) {
  double worst = -std::numeric_limits<double>::infinity();
  IntegrateOptions opts;
  opts.tol = tol;
  for (std::size_t i = 0; i <= 100; ++i) opts.sample_times.push_back(t_max * static_cast<double>(i) / 100.0);
  for (auto start : starts) {
    start.lam = 0.0;
    const auto traj = integrate(metric, start, t_max, opts);
    for (const auto& s : traj.samples) worst = std::max(worst, s.state.lam + std::tanh(s.t));
  }
  return worst;
}

NontrapReport certify_nontrapping(const HalfSpaceMetric& metric, const NontrapOptions& options) {
  if (!(options.escape_x > 0.0 && options.escape_x < 1.0)) throw ContractError("escape_x must lie in (0, 1)");
  if (!(options.t_max > 0.0)) throw ContractError("t_max must be positive");
  const int n = metric.n();

  NontrapReport report;
  report.seed = options.seed;
  report.records.resize(options.samples);

  // Draw every start first so results do not depend on the worker count.
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  const double log_lo = std::log(options.escape_x);
  for (auto& rec : report.records) {
    ZeroPhasePoint s;
    s.x = std::exp(log_lo + (0.0 - log_lo) * unit(rng));
    s.y.resize(static_cast<std::size_t>(n));
    for (auto& yi : s.y) yi = options.box * (2.0 * unit(rng) - 1.0);
    Eigen::VectorXd v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = normal(rng);
    v.normalize();
    s.lam = v[0];
    s.mu = mu_from_unit(metric, s.x, s.y, v.tail(n));
    rec.start = std::move(s);
  }

  IntegrateOptions opts;
  opts.tol = options.tol;
  opts.escape_x = options.escape_x * 0.999;  // starts sit at x >= escape_x
  parallel_for(report.records.size(), [&](std::size_t i) {
    auto& rec = report.records[i];
    try {
      const auto fwd = integrate(metric, rec.start, options.t_max, opts);
      const auto bwd = integrate(metric, rec.start, -options.t_max, opts);
      if (fwd.exit_forward) rec.forward_time = *fwd.exit_time;
      if (bwd.exit_backward) rec.backward_time = -*bwd.exit_time;
      rec.status = (rec.forward_time && rec.backward_time) ? EscapeStatus::escaped : EscapeStatus::trapped;
    } catch (const IntegrationError&) {
      rec.status = EscapeStatus::inconclusive;
    }
  });

  for (const auto& rec : report.records) {
    if (rec.status == EscapeStatus::trapped) ++report.trapped_count;
    if (rec.status == EscapeStatus::inconclusive) ++report.inconclusive_count;
    if (rec.forward_time) report.worst_escape_time = std::max(report.worst_escape_time, *rec.forward_time);
    if (rec.backward_time) report.worst_escape_time = std::max(report.worst_escape_time, *rec.backward_time);
  }
  report.passed = report.trapped_count == 0 && report.inconclusive_count == 0;
  return report;
}

ZeroPhasePoint hyperbolic_initial_direction(const PointPair& pair) {
  const auto& p = pair.p;
  const auto& q = pair.q;
  if (!(p.x > 0.0 && q.x > 0.0)) throw DomainError("hyperbolic_initial_direction: x must be positive");
  const std::size_t n = p.y.size();
  ZeroPhasePoint dir;
  dir.x = p.x;
  dir.y = p.y;
  dir.mu.assign(n, 0.0);
  double sep = 0.0;
  for (std::size_t i = 0; i < n; ++i) sep += (q.y[i] - p.y[i]) * (q.y[i] - p.y[i]);
  sep = std::sqrt(sep);
  if (sep == 0.0) {
    dir.lam = q.x >= p.x ? 1.0 : -1.0;
    return dir;
  }
  // Geodesic is a half circle centred on the boundary in the vertical plane
  // through p and q; c is the centre's offset from p along the plane.
  const double c = (sep * sep + q.x * q.x - p.x * p.x) / (2.0 * sep);
  const double radius = std::hypot(c, p.x);
  dir.lam = c / radius;
  for (std::size_t i = 0; i < n; ++i) dir.mu[i] = (p.x / radius) * (q.y[i] - p.y[i]) / sep;
  return dir;
}

namespace {

struct ShootProblem {
  const HalfSpaceMetric& metric;
  const PointPair& pair;
  double int_tol;

  // Length of the covector v = T * (lam, mu) measured at p.
  double length(const Eigen::VectorXd& v) const {
    ZeroPhasePoint s;
    s.x = pair.p.x;
    s.y = pair.p.y;
    s.lam = v[0];
    s.mu.assign(v.data() + 1, v.data() + v.size());
    return std::sqrt(cosphere_norm(metric, s));
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& v) const {
    const double len = length(v);
    ZeroPhasePoint s;
    s.x = pair.p.x;
    s.y = pair.p.y;
    s.lam = v[0] / len;
    s.mu.resize(static_cast<std::size_t>(v.size() - 1));
    for (Eigen::Index i = 1; i < v.size(); ++i) s.mu[static_cast<std::size_t>(i - 1)] = v[i] / len;
    IntegrateOptions opts;
    opts.tol = int_tol;
    opts.sample_times = {len};
    const auto end = integrate(metric, s, len, opts).final_state();
    Eigen::VectorXd r(v.size());
    r[0] = std::log(end.x / pair.q.x);
    for (Eigen::Index i = 1; i < v.size(); ++i) {
      const auto ui = static_cast<std::size_t>(i - 1);
      r[i] = (end.y[ui] - pair.q.y[ui]) / pair.q.x;
    }
    return r;
  }
};

struct NewtonOutcome {
  bool converged = false;
  Eigen::VectorXd v;
  double residual = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
};

NewtonOutcome newton_shoot(const ShootProblem& prob, Eigen::VectorXd v, double target, std::size_t max_iter) {
  NewtonOutcome out;
  Eigen::VectorXd r = prob.residual(v);
  double rn = r.norm();
  const Eigen::Index m = v.size();
  for (std::size_t it = 0; it < max_iter; ++it) {
    out.iterations = it;
    if (rn <= target) {
      out.converged = true;
      break;
    }
    Eigen::MatrixXd jac(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(v[j]));
      Eigen::VectorXd vp = v, vm = v;
      vp[j] += h;
      vm[j] -= h;
      jac.col(j) = (prob.residual(vp) - prob.residual(vm)) / (2.0 * h);
    }
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    double damping = 1.0;
    bool improved = false;
    for (int k = 0; k < 12; ++k) {
      Eigen::VectorXd trial = v + damping * step;
      try {
        if (prob.length(trial) > 0.0) {
          Eigen::VectorXd rt = prob.residual(trial);
          if (rt.norm() < rn) {
            v = trial;
            r = rt;
            rn = rt.norm();
            improved = true;
            break;
          }
        }
      } catch (const IntegrationError&) {
      } catch (const DomainError&) {
      }
      damping *= 0.5;
    }
    if (!improved) break;
  }
  if (rn <= target) out.converged = true;
  out.v = v;
  out.residual = rn;
  return out;
}

}  // namespace

ShootResult shoot_geodesic(const HalfSpaceMetric& metric, const PointPair& pair, const ShootOptions& options) {
  if (!(pair.p.x > 0.0 && pair.q.x > 0.0)) throw DomainError("shoot_geodesic: points must have x > 0");
  if (static_cast<int>(pair.p.y.size()) != metric.n() || pair.q.y.size() != pair.p.y.size()) {
    throw ContractError("shoot_geodesic: point dimension does not match metric");
  }
  ShootResult result;
  if (hyperbolic_distance(pair) == 0.0) {
    result.distance = 0.0;
    return result;
  }
  const double int_tol = std::min(options.tol, 1e-11);
  const ShootProblem prob{metric, pair, int_tol};
  const double target = std::max(options.tol, 50.0 * int_tol);

  const auto dir = hyperbolic_initial_direction(pair);
  const double d0 = hyperbolic_distance(pair);
  const Eigen::Index m = metric.n() + 1;
  Eigen::VectorXd seed(m);
  seed[0] = dir.lam;
  for (Eigen::Index i = 1; i < m; ++i) seed[i] = dir.mu[static_cast<std::size_t>(i - 1)];
  seed *= d0 * options.seed_scale;

  std::mt19937_64 rng(options.rng_seed);
  if (options.seed_jitter > 0.0) {
    std::normal_distribution<double> jitter(0.0, options.seed_jitter);
    const double scale = seed.norm();
    for (Eigen::Index i = 0; i < m; ++i) seed[i] += jitter(rng) * scale;
  }
  std::vector<Eigen::VectorXd> seeds{seed};
  std::normal_distribution<double> normal(0.0, 0.1);
  for (std::size_t k = 0; k < options.extra_seeds; ++k) {
    Eigen::VectorXd s = seed;
    for (Eigen::Index i = 0; i < m; ++i) s[i] += normal(rng) * seed.norm();
    seeds.push_back(s);
  }

  std::vector<std::pair<double, NewtonOutcome>> solutions;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const auto& s : seeds) {
    NewtonOutcome out;
    try {
      out = newton_shoot(prob, s, target, options.max_iterations);
    } catch (const IntegrationError&) {
      continue;
    }
    best_residual = std::min(best_residual, out.residual);
    if (out.converged) solutions.emplace_back(prob.length(out.v), out);
  }
  if (solutions.empty()) {
    throw ConvergenceError("shoot_geodesic: no connecting geodesic found", best_residual);
  }
  std::sort(solutions.begin(), solutions.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  result.multiplicity = 1;
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    if (solutions[i].first - solutions[i - 1].first > 1e-6 * std::max(1.0, solutions[i].first)) {
      ++result.multiplicity;
    }
  }
  const auto& best = solutions.front();
  result.distance = best.first;
  result.residual = best.second.residual;
  result.iterations = best.second.iterations;
  result.initial_direction.x = pair.p.x;
  result.initial_direction.y = pair.p.y;
  result.initial_direction.lam = best.second.v[0] / best.first;
  for (Eigen::Index i = 1; i < m; ++i) result.initial_direction.mu.push_back(best.second.v[i] / best.first);
  return result;
}

double shoot_distance(const HalfSpaceMetric& metric, const PointPair& pair, double tol) {
  ShootOptions opts;
  opts.tol = tol;
  return shoot_geodesic(metric, pair, opts).distance;
}

}  // namespace hypspec
