#include "hypspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hypspec/chi_plus.hpp"
#include "hypspec/fg_tail.hpp"
#include "hypspec/flow.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/hypgeo.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/multiplier.hpp"
#include "hypspec/slope_fit.hpp"
#include "hypspec/transform.hpp"
#include "hypspec/verify.hpp"

namespace hypspec {

namespace {

constexpr double pi = std::numbers::pi;

struct Spec {
  const char* name;
  double budget;
};

const Spec kSpecs[kCriterionCount] = {
    {"Stone/recursion equivalence", 10},
    {"heat-kernel anchor", 30},
    {"geodesic suite", 60},
    {"distance oracle", 120},
    {"distance defect bounded", 30},
    {"y-travel", 10},
    {"pointwise spectral-measure bounds", 60},
    {"restriction exponent p=1", 10},
    {"derivative bound", 30},
    {"chi_+ suite", 10},
    {"H3 spherical transform", 60},
    {"Kunze-Stein bound", 5},
    {"multiplier uniformity", 120},
    {"Fourier tail slope", 60},
    {"nontrapping certificate", 120},
};

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  // Records value and whether value <= limit.
  bool at_most(const std::string& key, double value, double limit) {
    r_.metrics.emplace_back(key, value);
    const bool ok = value <= limit;
    note(key, value, ok ? "<=" : ">", limit);
    all_ &= ok;
    return ok;
  }
  bool at_least(const std::string& key, double value, double limit) {
    r_.metrics.emplace_back(key, value);
    const bool ok = value >= limit;
    note(key, value, ok ? ">=" : "<", limit);
    all_ &= ok;
    return ok;
  }
  bool require(const std::string& key, bool ok) {
    r_.metrics.emplace_back(key, ok ? 1.0 : 0.0);
    if (!detail_.str().empty()) detail_ << "; ";
    detail_ << key << (ok ? " yes" : " NO");
    all_ &= ok;
    return ok;
  }
  void info(const std::string& key, double value) { r_.metrics.emplace_back(key, value); }

  bool all() const { return all_; }
  std::string detail() const { return detail_.str(); }

 private:
  void note(const std::string& key, double value, const char* op, double limit) {
    if (!detail_.str().empty()) detail_ << "; ";
    detail_.precision(3);
    detail_ << key << " " << value << " " << op << " " << limit;
  }

  CriterionResult& r_;
  std::ostringstream detail_;
  bool all_ = true;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void stone_recursion(Recorder& rec) {
  const auto sigmas = logspace(0.1, 10.0, 50);
  const auto rs = logspace(1e-3, 30.0, 200);
  const auto& sym = kernel_symbol(2, 1);
  double worst = 0.0;
  for (double s : sigmas) {
    for (double r : rs) {
      // dE has zeros in r, so the error is measured against the modulus of the
      // complex kernel (1/pi) D e^{i sigma r}, of which dE is the real part
      const double scale = std::abs(sym.evaluate({s, 0.0}, r)) / pi;
      worst = std::max(worst, std::abs(spectral_measure_stone(2, s, r) - spectral_measure(2, s, r)) / scale);
    }
  }
  rec.at_most("max_rel_error", worst, 1e-12);
}

void heat_anchor(Recorder& rec) {
  for (int n : {2, 4}) {
    double worst = 0.0;
    for (double t : {0.1, 1.0}) {
      for (double r : {0.5, 1.0, 5.0}) worst = std::max(worst, rel(heat_kernel_spectral(n, t, r), heat_kernel_recursion(n, t, r)));
    }
    rec.at_most("n=" + std::to_string(n) + " max_rel_error", worst, 1e-8);
  }
  // closed form on H^3 as an outside anchor for the constants
  double worst = 0.0;
  for (double t : {0.1, 1.0}) {
    for (double r : {0.5, 1.0, 5.0}) worst = std::max(worst, rel(heat_kernel_recursion(2, t, r), heat_kernel_h3(t, r)));
  }
  rec.at_most("n=2 vs closed form", worst, 1e-8);
}

std::vector<ZeroPhasePoint> random_starts(int n, std::size_t count, std::uint64_t seed, double x_lo, double x_hi,
                                          double box) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  std::vector<ZeroPhasePoint> out(count);
  for (auto& s : out) {
    s.x = x_lo * std::pow(x_hi / x_lo, unit(rng));
    s.y.resize(static_cast<std::size_t>(n));
    for (auto& v : s.y) v = box * (2.0 * unit(rng) - 1.0);
    s.lam = normal(rng);
    s.mu.resize(static_cast<std::size_t>(n));
    for (auto& v : s.mu) v = normal(rng);
  }
  return out;
}

void geodesic_suite(Recorder& rec) {
  const auto exact = exact_hyperbolic(2);
  const auto bumped = conformal_bump(2, BumpParams{});
  const auto starts = random_starts(2, 8, 21, 0.2, 1.0, 0.5);

  IntegrateOptions opts;
  opts.tol = 1e-12;
  for (const auto* metric : {&exact, &bumped}) {
    double drift = 0.0, reversal = 0.0;
    for (const auto& s : starts) {
      const auto start = normalize_to_cosphere(*metric, s);
      drift = std::max(drift, integrate(*metric, start, 40.0, opts).max_constraint_drift);
      const auto fwd = integrate(*metric, start, 5.0, opts);
      const auto back = integrate(*metric, fwd.final_state(), -5.0, opts).final_state();
      const auto a = start.pack();
      const auto b = back.pack();
      for (std::size_t i = 0; i < a.size(); ++i) reversal = std::max(reversal, std::abs(a[i] - b[i]));
    }
    const std::string tag = metric == &exact ? "exact" : "perturbed";
    rec.at_most(tag + " drift", drift, 1e-9);
    rec.at_most(tag + " reversal", reversal, 1e-8);
  }

  auto lam_starts = random_starts(2, 100, 22, 0.01, 1.0, 1.0);
  for (auto& s : lam_starts) s.lam = 0.0;
  rec.at_most("lambda violation", lambda_inequality_violation(exact, lam_starts, 5.0, 1e-11), 1e-6);
}

void distance_oracle(Recorder& rec) {
  for (int n : {2, 4}) {
    const auto metric = exact_hyperbolic(n);
    std::mt19937_64 rng(31 + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    std::size_t min_iter = std::numeric_limits<std::size_t>::max();
    // start Newton away from the closed-form answer so the boundary value problem is actually solved
    ShootOptions opts;
    opts.tol = 1e-10;
    opts.seed_scale = 0.8;
    opts.seed_jitter = 0.05;
    for (int i = 0; i < 100; ++i) {
      PointPair pair;
      for (auto* p : {&pair.p, &pair.q}) {
        p->x = 0.1 * std::pow(10.0, unit(rng));
        p->y.resize(static_cast<std::size_t>(n));
        for (auto& v : p->y) v = 2.0 * unit(rng) - 1.0;
      }
      opts.rng_seed = 1000 + static_cast<std::uint64_t>(i);
      const auto shot = shoot_geodesic(metric, pair, opts);
      min_iter = std::min(min_iter, shot.iterations);
      worst = std::max(worst, rel(shot.distance, hyperbolic_distance(pair)));
    }
    rec.at_most("n=" + std::to_string(n) + " max_rel_error", worst, 1e-6);
    rec.info("n=" + std::to_string(n) + " min Newton iterations", static_cast<double>(min_iter));
  }
}

double defect_sup(double x_min) {
  const auto xs = logspace(x_min, 1.0, 20);
  const auto gaps = linspace(0.0, 10.0, 25);
  double sup = 0.0;
  for (double x : xs) {
    for (double xp : xs) {
      for (double g : gaps) sup = std::max(sup, std::abs(distance_defect({{x, {0.0, 0.0}}, {xp, {g, 0.0}}})));
    }
  }
  return sup;
}

void distance_defect_check(Recorder& rec) {
  const double a = defect_sup(1e-4);
  const double b = defect_sup(5e-5);
  rec.info("sup_at_1e-4", a);
  rec.info("sup_at_5e-5", b);
  rec.require("finite", std::isfinite(a) && std::isfinite(b));
  rec.at_most("relative change", std::abs(b - a) / a, 0.05);
  double worst = 0.0;
  for (double t : {1e-4, 0.3, 1.0, 7.0}) {
    worst = std::max(worst, std::abs(distance_defect({{t, {0.0, 0.0}}, {t, {0.0, 0.0}}}) + std::log(2.0)));
  }
  rec.at_most("diagonal error", worst, 1e-12);
}

void y_travel(Recorder& rec) {
  const auto report = y_travel_check(exact_hyperbolic(2), 0.05, 0.01);
  rec.info("ratio", report.bound_ratio);
  rec.at_most("|ratio-1|", std::abs(report.bound_ratio - 1.0), 1e-3);
  rec.at_most("|integral-1|", std::abs(y_travel_integral(1.0) - 1.0), 1e-10);
}

void bound_reports(Recorder& rec, const std::vector<BoundCheckReport>& reports) {
  for (const auto& r : reports) {
    rec.info(r.label + " sup_ratio", r.sup_ratio);
    rec.require(r.label, r.passed);
  }
}

void pointwise_bounds(Recorder& rec) {
  for (int n : {2, 4}) {
    bound_reports(rec, check_pointwise_bounds(n, Regime::low, {0}));
    bound_reports(rec, check_pointwise_bounds(n, Regime::high, {0, 1, 2}));
  }
}

void restriction(Recorder& rec) {
  const auto sigma = logspace(10.0, 1000.0, 24);
  for (int n : {2, 4}) {
    const auto report = restriction_scan(n, sigma);
    rec.info("n=" + std::to_string(n) + " slope", report.fit.slope);
    rec.at_most("n=" + std::to_string(n) + " |slope-n|", std::abs(report.fit.slope - n), 0.05);
  }
}

void derivative_bound(Recorder& rec) {
  std::vector<BoundCheckReport> reports;
  for (int j : {1, 2, 3}) reports.push_back(deriv_bound_check(2, j));
  bound_reports(rec, reports);
}

void chi_suite(Recorder& rec) {
  const auto f = gaussian_test_function();
  double heaviside = 0.0, delta = 0.0;
  for (double x : {-1.0, 0.0, 0.5, 3.0}) {
    const double running = 0.5 * std::sqrt(pi) * (1.0 + std::erf(x));
    heaviside = std::max(heaviside, std::abs(chi_plus_pair(0.0, f, x) - running));
    delta = std::max(delta, std::abs(chi_plus_pair(-1.0, f, x) - f(x)));
  }
  rec.at_most("heaviside error", heaviside, 1e-8);
  rec.at_most("delta error", delta, 1e-8);

  double semigroup = 0.0;
  for (auto [mu, nu] : {std::pair{0.0, 0.0}, std::pair{0.5, 0.25}, std::pair{-0.5, 1.0}}) {
    const auto [lhs, rhs] = chi_plus_semigroup(mu, nu, f, 1.0);
    semigroup = std::max(semigroup, std::abs(lhs - rhs) / std::abs(rhs));
  }
  rec.at_most("semigroup rel error", semigroup, 1e-6);

  double worst = 0.0;
  for (double s : linspace(-20.0, 20.0, 401)) {
    const auto [lhs, rhs] = gamma_multiplier_bound(s);
    worst = std::max(worst, lhs / rhs);
  }
  rec.at_most("max |1/Gamma(1+is)| e^{-pi|s|/2}", worst, 1.0 + 1e-12);
}

double round_trip_error(std::size_t count) {
  const auto r = default_radial_grid(count);
  const auto kappa = RadialProfile::sample(r, [](double x) { return std::exp(-2.0 * x); });
  TransformOptions opts;
  opts.sigma_max = static_cast<double>(count) / 16.0;
  opts.sigma_count = static_cast<std::size_t>(opts.sigma_max) * 64 + 1;
  const auto back = inverse_spherical_transform_h3(spherical_transform_h3(kappa, opts), r);
  return l2_distance_h3(back, kappa) / l2_norm_h3(kappa);
}

void transform_suite(Recorder& rec) {
  const double e2048 = round_trip_error(2048);
  const double e4096 = round_trip_error(4096);
  rec.at_most("round trip 2048", e2048, 1e-4);
  rec.info("round trip 4096", e4096);
  rec.at_most("error ratio 4096/2048", e4096 / e2048, 0.5);

  auto k1 = [](double x) { return std::exp(-x * x); };
  auto k2 = [](double x) { return std::exp(-0.5 * x * x); };
  const auto r = default_radial_grid(4096);
  TransformOptions opts;
  opts.sigma_max = 64.0;
  opts.sigma_count = 4097;
  const auto rho = linspace(0.05, 6.0, 128);
  const auto conv = radial_convolve(RadialProfile::sample(r, k1), RadialProfile::sample(r, k2), opts, rho);
  double err = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double direct = radial_convolve_direct(k1, k2, rho[i], 8.0, 1e-12);
    err = std::max(err, std::abs(conv.values[i] - direct));
    peak = std::max(peak, std::abs(direct));
  }
  rec.at_most("convolution rel error", err / peak, 1e-5);
}

void kunze_stein(Recorder& rec) {
  for (int n : {2, 4}) {
    for (double q : {2.5, 3.0, 4.0}) {
      const auto report = kunze_stein_bound([n](double r) { return (1.0 + r) * std::exp(-0.5 * n * r); }, n, q);
      std::ostringstream key;
      key << "n=" << n << " q=" << q << " finite";
      rec.info(key.str() + " bound", report.bound);
      rec.require(key.str(), !report.divergent && std::isfinite(report.bound));
    }
  }
  const auto decaying = kunze_stein_bound([](double r) { return std::exp(-r) / ((1.0 + r) * (1.0 + r)); }, 2, 4.0);
  rec.require("e^{-r}(1+r)^{-2} q=4 finite", !decaying.divergent);
  const auto slow = kunze_stein_bound([](double r) { return std::exp(-0.5 * r); }, 2, 2.1);
  rec.info("under-decaying tail rate", slow.tail_rate);
  rec.require("under-decaying flagged", slow.divergent);
  const auto zero = kunze_stein_bound([](double) { return 0.0; }, 2, 3.0);
  rec.require("zero kernel gives 0", zero.bound == 0.0 && !zero.divergent);
}

void multiplier_suite(Recorder& rec) {
  std::vector<double> alphas;
  for (int k = 0; k <= 10; ++k) alphas.push_back(std::ldexp(1.0, -k));
  const std::vector<Multiplier> tests = {gaussian_multiplier(), polynomial_multiplier(3), rough_multiplier()};
  for (const auto& F : tests) {
    const auto report = multiplier_uniformity(F, alphas);
    rec.at_most(F.name + " max/min", report.max_min_ratio, 10.0);
    rec.at_most(F.name + " trend", report.trend_slope, 0.02);
  }
  const std::vector<double> rs = {0.5, 1.0, 2.0, 5.0};
  for (const auto& F : tests) {
    double worst = 0.0;
    for (double a : {1.0, 0.25, 0.0625}) {
      const auto b = multiplier_kernel(2, F, a, rs);
      double peak = 0.0, err = 0.0;
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const double spectral = multiplier_kernel_spectral(2, F, a, rs[i]);
        peak = std::max(peak, std::abs(spectral));
        err = std::max(err, std::abs(b.values[i] - spectral));
      }
      worst = std::max(worst, err / peak);
    }
    rec.at_most(F.name + " route agreement", worst, 1e-6);
  }
}

void fourier_tail(Recorder& rec) {
  const auto F = gaussian_multiplier();
  std::vector<double> R;
  for (int k = 0; k <= 8; ++k) R.push_back(4.0 * std::pow(2.0, 0.5 * k));
  for (double m : {0.5, 1.0, 1.5}) {
    const FgTail tail(F, m);
    std::vector<double> values;
    for (double x : R) values.push_back(tail.tail(x));
    const auto fit = fit_loglog(R, values);
    std::ostringstream key;
    key << "m=" << m;
    rec.info(key.str() + " slope", fit.slope);
    rec.at_most(key.str() + " |slope+(2m+1)|", std::abs(fit.slope + 2.0 * m + 1.0), 0.3);
  }
}

void nontrapping(Recorder& rec) {
  NontrapOptions opts;
  opts.samples = 1000;
  opts.t_max = 100.0;
  for (int which = 0; which < 2; ++which) {
    const auto metric = which == 0 ? exact_hyperbolic(2) : conformal_bump(2, BumpParams{});
    const auto report = certify_nontrapping(metric, opts);
    const std::string tag = which == 0 ? "exact" : "perturbed";
    rec.info(tag + " worst escape time", report.worst_escape_time);
    rec.at_most(tag + " trapped", static_cast<double>(report.trapped_count), 0.0);
    rec.at_most(tag + " inconclusive", static_cast<double>(report.inconclusive_count), 0.0);
  }
}

using Runner = void (*)(Recorder&);
const Runner kRunners[kCriterionCount] = {
    stone_recursion,  heat_anchor,  geodesic_suite,   distance_oracle, distance_defect_check,
    y_travel,         pointwise_bounds, restriction,  derivative_bound, chi_suite,
    transform_suite,  kunze_stein,  multiplier_suite, fourier_tail,    nontrapping,
};

void check_id(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must lie in [1, 15]");
}

}  // namespace

std::string criterion_name(int id) {
  check_id(id);
  return kSpecs[id - 1].name;
}

double criterion_budget(int id) {
  check_id(id);
  return kSpecs[id - 1].budget;
}

CriterionResult run_criterion(int id) {
  check_id(id);
  CriterionResult result;
  result.id = id;
  result.name = kSpecs[id - 1].name;
  result.budget_seconds = kSpecs[id - 1].budget;
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    kRunners[id - 1](rec);
    ok = rec.all();
  } catch (const std::exception& e) {
    error = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = result.seconds < result.budget_seconds;
  result.passed = ok && in_time;
  result.detail = rec.detail();
  if (!error.empty()) result.detail += (result.detail.empty() ? "" : "; ") + std::string("error: ") + error;
  if (!in_time) result.detail += (result.detail.empty() ? "" : "; ") + std::string("over time budget");
  return result;
}

}  // namespace hypspec
