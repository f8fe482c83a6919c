#include <gtest/gtest.h>

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "hypspec/errors.hpp"
#include "hypspec/flow.hpp"

using namespace hypspec;

namespace {

ZeroPhasePoint state(double x, std::vector<double> y, double lam, std::vector<double> mu) {
  return {x, std::move(y), lam, std::move(mu)};
}

// Hamiltonian H = (lam^2 + h(mu, mu)) / 2 in the 0-cotangent variables; the
// flow is x' = x dH/dlam, y' = x dH/dmu, lam' = -x dH/dx - mu . dH/dmu, mu' = lam mu - x dH/dy.
double hamiltonian(const HalfSpaceMetric& m, double x, const std::vector<double>& y, double lam,
                   const std::vector<double>& mu) {
  const auto g = m.evaluate(x, y).g0;
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()));
  return 0.5 * (lam * lam + v.dot(g.ldlt().solve(v)));
}

}  // namespace

TEST(GeodesicRhs, ExactCases) {
  const auto m = exact_hyperbolic(2);
  const auto a = geodesic_rhs(m, state(1, {0, 0}, 1, {0, 0}));
  EXPECT_EQ(a.dx, 1.0);
  EXPECT_EQ(a.dlam, 0.0);
  EXPECT_EQ(a.dy[0], 0.0);
  EXPECT_EQ(a.dmu[0], 0.0);
  const auto b = geodesic_rhs(m, state(1, {0, 0}, 0, {1, 0}));
  EXPECT_EQ(b.dx, 0.0);
  EXPECT_EQ(b.dy[0], 1.0);
  EXPECT_EQ(b.dy[1], 0.0);
  EXPECT_EQ(b.dlam, -1.0);
  EXPECT_EQ(b.dmu[0], 0.0);
  EXPECT_THROW(geodesic_rhs(m, state(0, {0, 0}, 0, {1, 0})), DomainError);
}

TEST(GeodesicRhs, PerturbedMatchesHamiltonianFiniteDifferences) {
  BumpParams p;
  p.amplitude = 0.2;
  const auto m = conformal_bump(2, p);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ux(0.2, 0.8), uy(-0.3, 0.3), um(-1, 1);
  const double h = 1e-6;
  for (int k = 0; k < 10; ++k) {
    const double x = ux(rng), lam = um(rng);
    const std::vector<double> y{uy(rng), uy(rng)}, mu{um(rng), um(rng)};
    const auto rhs = geodesic_rhs(m, state(x, y, lam, mu));
    const double dH_dx = (hamiltonian(m, x + h, y, lam, mu) - hamiltonian(m, x - h, y, lam, mu)) / (2 * h);
    double mu_dH_dmu = 0.0;
    for (int i = 0; i < 2; ++i) {
      auto mp = mu, mm = mu;
      mp[i] += h;
      mm[i] -= h;
      const double dH_dmu = (hamiltonian(m, x, y, lam, mp) - hamiltonian(m, x, y, lam, mm)) / (2 * h);
      mu_dH_dmu += mu[i] * dH_dmu;
      EXPECT_NEAR(rhs.dy[i], x * dH_dmu, 1e-6);
      auto yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      const double dH_dy = (hamiltonian(m, x, yp, lam, mu) - hamiltonian(m, x, ym, lam, mu)) / (2 * h);
      EXPECT_NEAR(rhs.dmu[i], lam * mu[i] - x * dH_dy, 1e-6);
    }
    EXPECT_NEAR(rhs.dx, x * lam, 1e-15);
    EXPECT_NEAR(rhs.dlam, -x * dH_dx - mu_dH_dmu, 1e-6);
  }
}

TEST(Integrate, VerticalRay) {
  const auto m = exact_hyperbolic(2);
  IntegrateOptions o;
  o.tol = 1e-12;
  const auto t = integrate(m, state(1, {0, 0}, 1, {0, 0}), 5.0, o);
  EXPECT_NEAR(t.final_state().x / std::exp(5.0), 1.0, 1e-9);
  EXPECT_EQ(t.samples.back().t, 5.0);
}

TEST(Integrate, SemicircleGeodesic) {
  // from the top of the unit semicircle: x = sech t, y = tanh t
  const auto m = exact_hyperbolic(2);
  IntegrateOptions o;
  o.tol = 1e-12;
  const auto t = integrate(m, state(1, {0, 0}, 0, {1, 0}), 3.0, o);
  const auto& s = t.final_state();
  const PointPair pair{{s.x, s.y}, {1.0 / std::cosh(3.0), {std::tanh(3.0), 0.0}}};
  EXPECT_LT(hyperbolic_distance(pair), 1e-7);
}

TEST(Integrate, SampleTimesAreHitExactly) {
  const auto m = exact_hyperbolic(1);
  IntegrateOptions o;
  o.sample_times = {0.0, 0.25, 1.0, 2.5};
  const auto t = integrate(m, state(1, {0}, 0.3, {0.7}), 2.5, o);
  ASSERT_EQ(t.samples.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t.samples[i].t, o.sample_times[i]);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_GT(t.samples[i].t, t.samples[i - 1].t);
}

TEST(Integrate, ConstraintDriftAndReversal) {
  BumpParams p;
  p.amplitude = 0.05;
  for (const auto& m : {exact_hyperbolic(2), conformal_bump(2, p)}) {
    IntegrateOptions o;
    o.tol = 1e-12;
    const auto start = normalize_to_cosphere(m, state(0.5, {0.1, -0.2}, 0.3, {0.4, 0.5}));
    EXPECT_NEAR(cosphere_norm(m, start), 1.0, 1e-14);
    const auto long_run = integrate(m, start, 40.0, o);
    EXPECT_LE(long_run.max_constraint_drift, 1e-9);
    const auto fwd = integrate(m, start, 4.0, o);
    const auto back = integrate(m, fwd.final_state(), -4.0, o).final_state();
    const auto a = start.pack(), b = back.pack();
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
  }
}

TEST(Integrate, EscapeStopsEarly) {
  const auto m = exact_hyperbolic(2);
  IntegrateOptions o;
  o.escape_x = 1e-3;
  const auto t = integrate(m, state(1, {0, 0}, -1, {0, 0}), 100.0, o);
  ASSERT_TRUE(t.exit_time.has_value());
  // detected at the first accepted step past the threshold
  EXPECT_GE(*t.exit_time, std::log(1e3));
  EXPECT_LT(*t.exit_time, std::log(1e3) + 0.1);
  EXPECT_LT(t.final_state().x, 1e-3);
  EXPECT_TRUE(t.exit_forward);
}

TEST(BoundaryBicharacteristic, ClosedForm) {
  const std::vector<double> ys{0.3, -1.0}, ms{0.6, 0.8};
  const auto s = boundary_bicharacteristic(std::numbers::pi / 2, ys, ms);
  EXPECT_EQ(s.x, 0.0);
  EXPECT_NEAR(s.lam, 0.0, 1e-16);
  EXPECT_EQ(s.mu[0], 0.6);
  const auto rhs = boundary_rhs(exact_hyperbolic(2), s);
  EXPECT_NEAR(rhs.dlam, -1.0, 1e-15);
  EXPECT_THROW(boundary_bicharacteristic(0.0, ys, ms), DomainError);
  EXPECT_THROW(boundary_bicharacteristic(std::numbers::pi, ys, ms), DomainError);
}

TEST(BoundaryBicharacteristic, SatisfiesRestrictedFlowUnderTimeChange) {
  // tau' = sin tau from pi/2 has tau(t) = 2 arctan(e^t); solve it numerically
  using namespace boost::numeric::odeint;
  std::vector<double> tau{std::numbers::pi / 2};
  integrate_adaptive(make_controlled(1e-13, 1e-13, runge_kutta_dopri5<std::vector<double>>()),
                     [](const std::vector<double>& x, std::vector<double>& dx, double) { dx[0] = std::sin(x[0]); }, tau,
                     0.0, 2.0, 1e-3);
  EXPECT_NEAR(tau[0], 2.0 * std::atan(std::exp(2.0)), 1e-10);

  // d/dt of the closed-form state equals the boundary equations
  const auto m = exact_hyperbolic(2);
  const std::vector<double> ys{0.0, 0.0}, ms{1.0, 0.0};
  for (double t : {-1.0, 0.0, 0.7}) {
    const double tt = 2.0 * std::atan(std::exp(t));
    const double h = 1e-5;
    const auto sp = boundary_bicharacteristic(2.0 * std::atan(std::exp(t + h)), ys, ms);
    const auto sm = boundary_bicharacteristic(2.0 * std::atan(std::exp(t - h)), ys, ms);
    const auto rhs = boundary_rhs(m, boundary_bicharacteristic(tt, ys, ms));
    EXPECT_NEAR((sp.lam - sm.lam) / (2 * h), rhs.dlam, 1e-8);
    EXPECT_NEAR((sp.mu[0] - sm.mu[0]) / (2 * h), rhs.dmu[0], 1e-8);
  }
}

TEST(YTravel, IntegralAtAlphaOne) {
  EXPECT_NEAR(y_travel_integral(1.0), 1.0, 1e-10);
  EXPECT_GT(y_travel_integral(0.9), 0.0);
}

TEST(YTravel, ExactHyperbolicRatio) {
  const auto r = y_travel_check(exact_hyperbolic(2), 0.05, 0.01);
  EXPECT_NEAR(r.bound_ratio, 1.0, 1e-3);
  EXPECT_GT(r.geodesics, 0u);
  EXPECT_LE(r.max_x_reached, 0.05);
}

TEST(YTravel, PerturbedRatioStaysNearOne) {
  BumpParams p;
  p.amplitude = 0.1;
  p.center = {0.01, 0.0, 0.0};
  p.radius = 0.04;
  const auto r = y_travel_check(conformal_bump(2, p), 0.05, 0.01);
  EXPECT_TRUE(std::isfinite(r.bound_ratio));
  EXPECT_LE(r.bound_ratio, 1.2);
}

TEST(YTravel, RejectsBadParameters) {
  EXPECT_THROW(y_travel_check(exact_hyperbolic(2), 0.05, 0.1), ContractError);
}

TEST(LambdaInequality, HoldsOnExactSpace) {
  const auto m = exact_hyperbolic(2);
  std::vector<ZeroPhasePoint> starts;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20; ++i) starts.push_back(state(0.5 + 0.4 * u(rng), {u(rng), u(rng)}, 0.0, {u(rng), u(rng)}));
  EXPECT_LE(lambda_inequality_violation(m, starts, 5.0, 1e-11), 1e-6);
}

TEST(Nontrap, ExactAndPerturbedEscape) {
  NontrapOptions o;
  o.samples = 200;
  const auto a = certify_nontrapping(exact_hyperbolic(2), o);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.trapped_count, 0u);
  EXPECT_EQ(a.seed, 1u);
  const auto b = certify_nontrapping(conformal_bump(2, BumpParams{}), o);
  EXPECT_TRUE(b.passed);
  EXPECT_GT(b.worst_escape_time, 0.0);
}

TEST(Nontrap, DeterministicForSeed) {
  NontrapOptions o;
  o.samples = 50;
  o.seed = 77;
  const auto a = certify_nontrapping(exact_hyperbolic(2), o);
  const auto b = certify_nontrapping(exact_hyperbolic(2), o);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].start.pack(), b.records[i].start.pack());
    EXPECT_EQ(a.records[i].forward_time, b.records[i].forward_time);
  }
}

TEST(Shoot, VerticalAndHorizontalPairs) {
  const auto m = exact_hyperbolic(2);
  EXPECT_NEAR(shoot_distance(m, {{1, {0, 0}}, {std::exp(1.0), {0, 0}}}), 1.0, 1e-8);
  ShootOptions o;
  o.seed_scale = 0.7;
  o.seed_jitter = 0.1;
  const auto r = shoot_geodesic(m, {{1, {0, 0}}, {1, {1, 0}}}, o);
  EXPECT_GT(r.iterations, 0u);
  EXPECT_NEAR(r.distance, std::acosh(1.5), 1e-6);
  EXPECT_EQ(shoot_distance(m, {{0.4, {0.2, 0.1}}, {0.4, {0.2, 0.1}}}), 0.0);
}

TEST(Shoot, SymmetricAndZeroAmplitudeBump) {
  BumpParams p;
  p.amplitude = 0.0;
  const auto flat = conformal_bump(2, p);
  const auto exact = exact_hyperbolic(2);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> lx(-1.5, 0.5), yy(-1, 1);
  for (int i = 0; i < 20; ++i) {
    const PointPair pq{{std::exp(lx(rng)), {yy(rng), yy(rng)}}, {std::exp(lx(rng)), {yy(rng), yy(rng)}}};
    const PointPair qp{pq.q, pq.p};
    const double d = shoot_distance(exact, pq);
    EXPECT_NEAR(d, shoot_distance(exact, qp), 1e-6);
    EXPECT_NEAR(shoot_distance(flat, pq), d, 1e-6 * d);
  }
}

TEST(Shoot, PerturbedMetricLengthensOrShortensSlightly) {
  const auto m = conformal_bump(2, BumpParams{});
  const PointPair pair{{0.3, {-0.3, 0.0}}, {0.6, {0.4, 0.1}}};
  ShootOptions o;
  o.extra_seeds = 3;
  const auto r = shoot_geodesic(m, pair, o);
  const double d0 = hyperbolic_distance(pair);
  EXPECT_NEAR(r.distance, d0, 0.1 * d0);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_GE(r.multiplicity, 1u);
}

TEST(Shoot, ReportsConvergenceFailure) {
  ShootOptions o;
  o.max_iterations = 0;
  o.seed_scale = 0.5;
  EXPECT_THROW(shoot_geodesic(exact_hyperbolic(2), {{1, {0, 0}}, {1, {2, 0}}}, o), ConvergenceError);
}
