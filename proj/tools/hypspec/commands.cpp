#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "hypspec/acceptance.hpp"
#include "hypspec/chi_plus.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/fg_tail.hpp"
#include "hypspec/flow.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/metric_config.hpp"
#include "hypspec/multiplier.hpp"
#include "hypspec/slope_fit.hpp"
#include "hypspec/verify.hpp"

namespace hypspec::cli {

namespace {

MetricConfig load_metric(const std::string& path, bool required) {
  if (path.empty()) {
    if (required) throw UsageError("--metric is required for this command");
    return MetricConfig{};
  }
  return MetricConfig::load(path);
}

HalfSpaceMetric halfspace_from(const MetricConfig& cfg) {
  if (cfg.kind == MetricKind::warped) throw UsageError("this command needs a half-space metric (hyperbolic or perturbed)");
  return make_halfspace_metric(cfg);
}

Json metric_echo(const MetricConfig& cfg) {
  Json out = Json::object();
  for (const auto& [k, v] : cfg.echo()) out[k] = v;
  return out;
}

HalfSpacePoint parse_point(const std::string& text, int n, const char* flag) {
  const auto v = parse_list(text);
  if (static_cast<int>(v.size()) != n + 1) {
    throw UsageError(std::string(flag) + " needs " + std::to_string(n + 1) + " comma-separated values (x,y1..yn)");
  }
  return {v[0], std::vector<double>(v.begin() + 1, v.end())};
}

std::vector<double> packed_row(double t, const ZeroPhasePoint& s) {
  std::vector<double> row{t};
  const auto p = s.pack();
  row.insert(row.end(), p.begin(), p.end());
  return row;
}

std::vector<std::string> state_header(int n) {
  std::vector<std::string> h{"x"};
  for (int i = 1; i <= n; ++i) h.push_back("y" + std::to_string(i));
  h.push_back("lam");
  for (int i = 1; i <= n; ++i) h.push_back("mu" + std::to_string(i));
  return h;
}

Json bound_json(const BoundCheckReport& r) {
  Json j;
  j["label"] = r.label;
  j["n"] = r.n;
  j["j"] = r.j;
  j["sigma_range"] = {r.sigma_lo, r.sigma_hi};
  j["r_range"] = {r.r_lo, r.r_hi};
  j["grid_sizes"] = r.grid_sizes;
  j["sup_ratio"] = r.sup_ratio;
  j["argmax"] = {{"sigma", r.argmax_sigma}, {"r", r.argmax_r}};
  j["refinement_deltas"] = r.refinement_deltas;
  j["passed"] = r.passed;
  return j;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_list(text)) {
    if (v != std::floor(v)) throw UsageError("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<double> fitted_line(const SlopeFit& fit, const std::vector<double>& xs) {
  std::vector<double> out;
  for (double x : xs) out.push_back(std::exp(fit.intercept + fit.slope * std::log(x)));
  return out;
}

}  // namespace

CommandOutput run_geodesic(const GeodesicArgs& a) {
  const auto cfg = load_metric(a.metric, true);
  const auto metric = halfspace_from(cfg);
  const int n = metric.n();
  const auto packed = parse_list(a.start);
  if (static_cast<int>(packed.size()) != 2 * n + 2) {
    throw UsageError("--start needs " + std::to_string(2 * n + 2) + " values (x,y1..yn,lam,mu1..mun)");
  }
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (a.samples < 2) throw UsageError("--samples must be at least 2");

  IntegrateOptions opts;
  opts.tol = a.tol;
  opts.sample_times = linspace(0.0, a.t, a.samples);
  const auto traj = integrate(metric, ZeroPhasePoint::unpack(packed), a.t, opts);

  CommandOutput out;
  CsvTable table;
  table.header = {"t"};
  for (auto& h : state_header(n)) table.header.push_back(h);
  table.header.push_back("constraint_drift");
  Series xs{"x(t)", {}, {}};
  for (const auto& s : traj.samples) {
    auto row = packed_row(s.t, s.state);
    row.push_back(std::abs(cosphere_norm(metric, s.state) - 1.0));
    table.rows.push_back(row);
    xs.xs.push_back(s.t);
    xs.ys.push_back(s.state.x);
  }
  out.csv = table;
  out.plot = Plot{"geodesic height", "t", "x", false, true, {xs}};
  out.results["metric"] = metric_echo(cfg);
  out.results["t_end"] = a.t;
  out.results["tol"] = a.tol;
  out.results["steps"] = traj.steps;
  out.results["max_constraint_drift"] = traj.max_constraint_drift;
  out.results["final_state"] = traj.final_state().pack();
  out.passed = traj.max_constraint_drift <= 100.0 * a.tol;
  out.summary = "max constraint drift " + format_number(traj.max_constraint_drift);
  return out;
}

CommandOutput run_distance(const DistanceArgs& a) {
  const auto cfg = load_metric(a.metric, false);
  const auto metric = halfspace_from(cfg);
  const PointPair pair{parse_point(a.p, metric.n(), "--p"), parse_point(a.q, metric.n(), "--q")};
  ShootOptions opts;
  opts.tol = a.tol;
  opts.extra_seeds = a.extra_seeds;
  opts.rng_seed = a.seed;
  const auto shot = shoot_geodesic(metric, pair, opts);
  const auto bdf = bdf_eval(pair);
  const double closed = hyperbolic_distance(pair);

  CommandOutput out;
  out.results["metric"] = metric_echo(cfg);
  out.results["distance"] = shot.distance;
  out.results["hyperbolic_distance"] = closed;
  out.results["relative_difference"] = closed > 0.0 ? std::abs(shot.distance - closed) / closed : 0.0;
  out.results["residual"] = shot.residual;
  out.results["iterations"] = shot.iterations;
  out.results["multiplicity"] = shot.multiplicity;
  out.results["rho"] = {{"L", bdf.rho_L}, {"R", bdf.rho_R}, {"F", bdf.rho_F}};
  out.results["defect"] = shot.distance + std::log(bdf.rho_L * bdf.rho_R);
  CsvTable t{{"distance", "hyperbolic_distance", "residual", "defect"},
             {{shot.distance, closed, shot.residual, shot.distance + std::log(bdf.rho_L * bdf.rho_R)}}};
  out.csv = t;
  out.summary = "distance " + format_number(shot.distance);
  return out;
}

CommandOutput run_nontrap(const NontrapArgs& a) {
  const auto cfg = load_metric(a.metric, false);
  const auto metric = halfspace_from(cfg);
  NontrapOptions opts;
  opts.samples = a.samples;
  opts.t_max = a.tmax;
  opts.escape_x = a.escape_x;
  opts.box = a.box;
  opts.tol = a.tol;
  opts.seed = a.seed;
  const auto report = certify_nontrapping(metric, opts);

  CommandOutput out;
  out.results["metric"] = metric_echo(cfg);
  out.results["passed"] = report.passed;
  out.results["trapped_count"] = report.trapped_count;
  out.results["inconclusive_count"] = report.inconclusive_count;
  out.results["worst_escape_time"] = report.worst_escape_time;
  out.results["seed"] = report.seed;
  out.results["samples"] = a.samples;
  out.results["t_max"] = a.tmax;
  out.results["escape_x"] = a.escape_x;
  Json flagged = Json::array();
  CsvTable table;
  table.header = {"index"};
  for (auto& h : state_header(metric.n())) table.header.push_back(h);
  for (const char* h : {"status", "forward_time", "backward_time"}) table.header.emplace_back(h);
  const double nan = std::nan("");
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    auto row = packed_row(static_cast<double>(i), rec.start);
    row.push_back(static_cast<double>(rec.status));
    row.push_back(rec.forward_time.value_or(nan));
    row.push_back(rec.backward_time.value_or(nan));
    table.rows.push_back(row);
    if (rec.status != EscapeStatus::escaped) {
      flagged.push_back({{"index", i},
                         {"status", rec.status == EscapeStatus::trapped ? "trapped" : "inconclusive"},
                         {"start", rec.start.pack()}});
    }
  }
  out.results["flagged"] = flagged;
  out.csv = table;
  out.passed = report.passed;
  out.summary = "trapped " + std::to_string(report.trapped_count) + ", inconclusive " +
                std::to_string(report.inconclusive_count);
  return out;
}

CommandOutput run_kernel(const KernelArgs& a) {
  const auto r = GridSpec::parse(a.r_grid).points();
  std::string kind = a.what;
  double param = 0.0;
  if (const auto colon = a.what.find(':'); colon != std::string::npos) {
    kind = a.what.substr(0, colon);
    try {
      param = std::stod(a.what.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad parameter in --what " + a.what);
    }
  }
  std::optional<Side> side;
  if (a.side == "upper") side = Side::upper;
  else if (a.side == "lower") side = Side::lower;
  else throw UsageError("--side must be upper or lower");

  std::vector<std::complex<double>> values(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (kind == "spectral") values[i] = spectral_measure(a.n, a.sigma, r[i]);
    else if (kind == "stone") values[i] = spectral_measure_stone(a.n, a.sigma, r[i]);
    else if (kind == "resolvent")
      values[i] = resolvent_kernel(a.n, {a.sigma, a.sigma_im}, r[i], a.sigma_im == 0.0 ? side : std::nullopt);
    else if (kind == "deriv") {
      if (param != std::floor(param)) throw UsageError("deriv:j needs an integer j");
      values[i] = spectral_measure_deriv(a.n, static_cast<int>(param), a.sigma, r[i]);
    } else if (kind == "heat") {
      values[i] = heat_kernel_recursion(a.n, param, r[i]);
    } else {
      throw UsageError("--what must be spectral, stone, resolvent, deriv:j or heat:t");
    }
  }

  CommandOutput out;
  CsvTable table{{"r", "value_re", "value_im"}, {}};
  Series re{"Re", r, {}}, im{"Im", r, {}};
  for (std::size_t i = 0; i < r.size(); ++i) {
    table.rows.push_back({r[i], values[i].real(), values[i].imag()});
    re.ys.push_back(values[i].real());
    im.ys.push_back(values[i].imag());
  }
  out.csv = table;
  out.plot = Plot{"kernel " + a.what, "r", "value", true, false, {re, im}};
  out.results["n"] = a.n;
  out.results["what"] = a.what;
  out.results["sigma"] = {a.sigma, a.sigma_im};
  out.results["r"] = r;
  out.results["value_re"] = re.ys;
  out.results["value_im"] = im.ys;
  out.summary = std::to_string(r.size()) + " kernel values";
  return out;
}

CommandOutput run_chi(const ChiArgs& a) {
  const auto f = test_function_from_name(a.test);
  const auto xs = parse_list(a.x);
  const std::complex<double> order{a.a, a.a_im};
  CommandOutput out;
  CsvTable table{{"x", "value_re", "value_im"}, {}};
  std::vector<double> re, im;
  for (double x : xs) {
    const auto v = chi_plus_pair(order, f, x);
    table.rows.push_back({x, v.real(), v.imag()});
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  out.csv = table;
  out.results["a"] = {a.a, a.a_im};
  out.results["test"] = f.name;
  out.results["x"] = xs;
  out.results["value_re"] = re;
  out.results["value_im"] = im;
  out.summary = xs.size() == 1 ? "value " + format_number(re[0]) + (im[0] != 0.0 ? " + i " + format_number(im[0]) : "")
                               : std::to_string(xs.size()) + " values";
  return out;
}

CommandOutput run_bounds(const BoundsArgs& a) {
  BoundCheckOptions opts;
  opts.base_count = a.base_count;
  opts.refinements = a.refinements;
  std::vector<BoundCheckReport> reports;
  if (a.deriv) {
    for (int j : parse_ints(a.j)) reports.push_back(deriv_bound_check(a.n, j, 1.0, 100.0, opts));
  } else {
    Regime regime;
    if (a.regime == "low") regime = Regime::low;
    else if (a.regime == "high") regime = Regime::high;
    else throw UsageError("--regime must be low or high");
    reports = check_pointwise_bounds(a.n, regime, parse_ints(a.j), opts);
  }
  CommandOutput out;
  Json checks = Json::array();
  CsvTable table{{"j", "far_zone", "sup_ratio", "last_delta", "passed"}, {}};
  std::size_t ok = 0;
  for (const auto& r : reports) {
    checks.push_back(bound_json(r));
    const bool far = r.r_lo >= 1.0;
    table.rows.push_back({static_cast<double>(r.j), far ? 1.0 : 0.0, r.sup_ratio,
                          r.refinement_deltas.empty() ? std::nan("") : r.refinement_deltas.back(),
                          r.passed ? 1.0 : 0.0});
    if (r.passed) ++ok;
  }
  out.csv = table;
  out.results["n"] = a.n;
  out.results["mode"] = a.deriv ? "deriv" : a.regime;
  out.results["checks"] = checks;
  out.passed = ok == reports.size();
  out.summary = std::to_string(ok) + " of " + std::to_string(reports.size()) + " checks passed";
  return out;
}

CommandOutput run_restriction(const RestrictionArgs& a) {
  const auto sigma = GridSpec::parse(a.sigma).points();
  const auto report = restriction_scan(a.n, sigma, a.tolerance);
  CommandOutput out;
  out.results["n"] = a.n;
  out.results["sigma_grid"] = report.sigma;
  out.results["norms"] = report.norms;
  out.results["slope"] = report.fit.slope;
  out.results["slope_ci"] = report.fit.confidence_halfwidth;
  out.results["residual_rms"] = report.fit.residual_rms;
  out.results["target_exponent"] = report.target_exponent;
  out.results["tolerance"] = a.tolerance;
  out.results["pass"] = report.passed;
  CsvTable table{{"sigma", "norm"}, {}};
  for (std::size_t i = 0; i < sigma.size(); ++i) table.rows.push_back({sigma[i], report.norms[i]});
  out.csv = table;
  out.plot = Plot{"L1 -> Linf norm of dE", "sigma", "norm", true, true,
                  {{"norm", sigma, report.norms}, {"fit slope " + format_number(report.fit.slope), sigma,
                                                   fitted_line(report.fit, sigma)}}};
  out.passed = report.passed;
  out.summary = "slope " + format_number(report.fit.slope) + " (target " + std::to_string(a.n) + ")";
  return out;
}

CommandOutput run_multiplier(const MultiplierArgs& a) {
  const auto F = multiplier_from_name(a.F);
  CommandOutput out;
  out.results["n"] = a.n;
  out.results["F"] = F.name;
  out.results["sobolev_norm"] = sobolev_norm(F, 0.5 * (a.n + 1)).norm;

  if (!a.alphas.empty()) {
    if (a.n != 2) throw UsageError("the far-diagonal uniformity report is implemented for n = 2");
    const auto alphas = parse_list(a.alphas);
    const auto report = multiplier_uniformity(F, alphas);
    std::vector<double> inv;
    for (double x : alphas) inv.push_back(1.0 / x);
    out.results["alphas"] = alphas;
    out.results["norms"] = report.norms;
    out.results["max_min_ratio"] = report.max_min_ratio;
    out.results["trend_slope"] = report.trend_slope;
    out.results["trend_ci"] = report.trend.confidence_halfwidth;
    out.results["bounded"] = report.bounded;
    CsvTable table{{"alpha", "norm"}, {}};
    for (std::size_t i = 0; i < alphas.size(); ++i) table.rows.push_back({alphas[i], report.norms[i]});
    out.csv = table;
    out.plot = Plot{"far-diagonal norm " + F.name, "1/alpha", "norm", true, true, {{"norm", inv, report.norms}}};
    out.passed = report.passed;
    out.summary = "max/min " + format_number(report.max_min_ratio) + ", trend " + format_number(report.trend_slope);
    return out;
  }

  const auto r = GridSpec::parse(a.r_grid).points();
  const auto kernel = multiplier_kernel(a.n, F, a.alpha, r);
  // spot checks against adaptive quadrature of the spectral integral at random grid points
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
  Json checks = Json::array();
  double peak = 0.0, err = 0.0;
  for (std::size_t k = 0; k < a.checks; ++k) {
    const std::size_t i = pick(rng);
    const double ref = multiplier_kernel_spectral(a.n, F, a.alpha, r[i]);
    peak = std::max(peak, std::abs(ref));
    err = std::max(err, std::abs(kernel.values[i] - ref));
    checks.push_back({{"r", r[i]}, {"filon", kernel.values[i]}, {"quadrature", ref}});
  }
  const double rel_err = peak > 0.0 ? err / peak : err;
  out.results["alpha"] = a.alpha;
  out.results["r"] = r;
  out.results["values"] = kernel.values;
  out.results["spot_checks"] = checks;
  out.results["spot_check_rel_error"] = rel_err;
  CsvTable table{{"r", "value"}, {}};
  std::vector<double> mag;
  for (std::size_t i = 0; i < r.size(); ++i) {
    table.rows.push_back({r[i], kernel.values[i]});
    mag.push_back(std::abs(kernel.values[i]));
  }
  out.csv = table;
  out.plot = Plot{"|K_alpha| " + F.name, "r", "|K|", true, true, {{"|K|", r, mag}}};
  out.passed = rel_err <= 1e-6;
  out.summary = "spot-check relative error " + format_number(rel_err);
  return out;
}

CommandOutput run_fgtail(const FgTailArgs& a) {
  const auto F = multiplier_from_name(a.F);
  const auto R = parse_list(a.R);
  if (R.size() < 2) throw UsageError("--R needs at least two values");
  const FgTail tail(F, a.m);
  std::vector<double> tails;
  for (double x : R) tails.push_back(tail.tail(x));
  // the fit needs 8 or more points: with fewer R values it uses 9 log-spaced points spanning them
  std::vector<double> fit_R = R;
  if (R.size() < 8) {
    const auto [lo, hi] = std::minmax_element(R.begin(), R.end());
    fit_R = logspace(*lo, *hi, 9);
  }
  std::vector<double> fit_tails;
  for (double x : fit_R) fit_tails.push_back(tail.tail(x));
  const auto fit = fit_loglog(fit_R, fit_tails);
  const double target = -(2.0 * a.m + 1.0);

  CommandOutput out;
  out.results["m"] = a.m;
  out.results["F"] = F.name;
  out.results["R_list"] = R;
  out.results["tails"] = tails;
  out.results["fitted_slope"] = fit.slope;
  out.results["slope_ci"] = fit.confidence_halfwidth;
  out.results["fit_R"] = fit_R;
  out.results["target_slope"] = target;
  CsvTable table{{"R", "tail"}, {}};
  for (std::size_t i = 0; i < R.size(); ++i) table.rows.push_back({R[i], tails[i]});
  out.csv = table;
  out.plot = Plot{"Fourier tail, m = " + format_number(a.m), "R", "tail", true, true,
                  {{"tail", fit_R, fit_tails}, {"fit slope " + format_number(fit.slope), fit_R, fitted_line(fit, fit_R)}}};
  out.passed = std::abs(fit.slope - target) <= a.slope_tolerance;
  out.summary = "slope " + format_number(fit.slope) + " (target " + format_number(target) + ")";
  return out;
}

CommandOutput run_report(const ReportArgs& a) {
  if (a.criterion < 1 || a.criterion > kCriterionCount) throw UsageError("--criterion must lie in [1, 15]");
  const auto r = run_criterion(a.criterion);
  CommandOutput out;
  out.results["criterion"] = r.id;
  out.results["name"] = r.name;
  out.results["passed"] = r.passed;
  out.results["within_budget"] = r.seconds < r.budget_seconds;
  out.results["budget_seconds"] = r.budget_seconds;
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  out.results["metrics"] = metrics;
  out.results["detail"] = r.detail;
  out.passed = r.passed;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2fs / %.0fs)", r.seconds, r.budget_seconds);
  out.summary = "criterion " + std::to_string(r.id) + " " + r.name + buf + ": " + r.detail;
  return out;
}

}  // namespace hypspec::cli
