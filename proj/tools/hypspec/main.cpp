#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hypspec/errors.hpp"
#include "output.hpp"

using namespace hypspec::cli;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

struct Common {
  std::string out;
  std::string format;
  bool timestamp = false;
};

std::string pick_format(const Common& c) {
  if (!c.format.empty()) return c.format;
  const auto dot = c.out.rfind('.');
  if (c.out.empty() || dot == std::string::npos) return "json";
  return c.out.substr(dot + 1);
}

int emit(const RunInfo& info, const CommandOutput& result, const Common& common) {
  const std::string format = pick_format(common);
  std::string text;
  if (format == "json") {
    text = render_json(info, result);
  } else if (format == "csv") {
    if (!result.csv) throw UsageError(info.command + " has no CSV output");
    text = render_csv(info, *result.csv);
  } else if (format == "svg") {
    if (!result.plot) throw UsageError(info.command + " has no SVG output");
    text = render_svg(info, *result.plot);
  } else {
    throw UsageError("unknown output format '" + format + "' (json, csv or svg)");
  }
  if (common.out.empty() || common.out == "-") {
    std::cout << text;
  } else {
    write_file(common.out, text);
    std::cout << (result.passed ? "pass: " : "FAIL: ") << result.summary << "\n";
  }
  return result.passed ? kPass : kCheckFailed;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output file; the extension picks csv, json or svg (default: JSON on stdout)");
  sub->add_option("--format", c.format, "Force the output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  sub->add_flag("--timestamp", c.timestamp, "Record the UTC run time in JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypspec: spectral measure, geodesic flow and multiplier checks on hyperbolic space"};
  app.set_config("--config", "", "INI/TOML file of flag values, one [subcommand] section per command");
  app.require_subcommand(1);
  app.set_version_flag("--version", HYPSPEC_VERSION);

  Common common;
  RunInfo info;
  std::function<CommandOutput()> action;

  GeodesicArgs geo;
  auto* s = app.add_subcommand("geodesic", "Integrate one geodesic of the 0-flow");
  s->add_option("--metric", geo.metric, "Metric config file (key=value lines)");
  s->add_option("--start", geo.start, "x,y1..yn,lam,mu1..mun")->required();
  s->add_option("--t", geo.t, "End time (negative integrates backward)");
  s->add_option("--tol", geo.tol, "Integrator tolerance");
  s->add_option("--samples", geo.samples, "Uniform output samples");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"metric", geo.metric}, {"start", geo.start}, {"t", geo.t}, {"tol", geo.tol}, {"samples", geo.samples}};
    action = [&] { return run_geodesic(geo); };
  });

  DistanceArgs dist;
  s = app.add_subcommand("distance", "Geodesic distance by shooting");
  s->add_option("--metric", dist.metric, "Metric config file (default: exact hyperbolic, n = 2)");
  s->add_option("--p", dist.p, "x,y1..yn")->required();
  s->add_option("--q", dist.q, "x,y1..yn")->required();
  s->add_option("--tol", dist.tol, "Shooting tolerance");
  s->add_option("--extra-seeds", dist.extra_seeds, "Perturbed seeds used to detect several geodesics");
  s->add_option("--seed", dist.seed, "Seed for the perturbed seeds");
  add_common(s, common);
  s->callback([&] {
    info.seed = dist.seed;
    info.config = {{"metric", dist.metric}, {"p", dist.p}, {"q", dist.q}, {"tol", dist.tol}, {"extra_seeds", dist.extra_seeds}};
    action = [&] { return run_distance(dist); };
  });

  NontrapArgs nt;
  s = app.add_subcommand("nontrap", "Nontrapping certificate by sampled escape");
  s->add_option("--metric", nt.metric, "Metric config file (default: exact hyperbolic, n = 2)");
  s->add_option("--samples", nt.samples, "Number of sampled starts");
  s->add_option("--tmax", nt.tmax, "Time limit in each direction");
  s->add_option("--escape-x", nt.escape_x, "Height counted as reaching infinity");
  s->add_option("--box", nt.box, "Half-width of the y box for starts");
  s->add_option("--tol", nt.tol, "Integrator tolerance");
  s->add_option("--seed", nt.seed, "Sampling seed");
  add_common(s, common);
  s->callback([&] {
    info.seed = nt.seed;
    info.config = {{"metric", nt.metric}, {"samples", nt.samples}, {"tmax", nt.tmax}, {"escape_x", nt.escape_x},
                   {"box", nt.box}, {"tol", nt.tol}};
    action = [&] { return run_nontrap(nt); };
  });

  KernelArgs ker;
  s = app.add_subcommand("kernel", "Resolvent, spectral-measure and heat kernels on H^{n+1}");
  s->add_option("--n", ker.n, "Even boundary dimension");
  s->add_option("--what", ker.what, "spectral, stone, resolvent, deriv:j or heat:t");
  s->add_option("--sigma", ker.sigma, "Spectral parameter (real part)");
  s->add_option("--sigma-im", ker.sigma_im, "Imaginary part of sigma (resolvent only)");
  s->add_option("--side", ker.side, "Boundary value for real sigma: upper or lower");
  s->add_option("--r-grid", ker.r_grid, "lo:hi:lin|log:count");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"n", ker.n}, {"what", ker.what}, {"sigma", ker.sigma}, {"sigma_im", ker.sigma_im},
                   {"side", ker.side}, {"r_grid", ker.r_grid}};
    action = [&] { return run_kernel(ker); };
  });

  ChiArgs chi;
  s = app.add_subcommand("chi", "Pair chi_+^a with a test function");
  s->add_option("--a", chi.a, "Order (real part)");
  s->add_option("--a-im", chi.a_im, "Order (imaginary part)");
  s->add_option("--test", chi.test, "gaussian or bump:m=K");
  s->add_option("--x", chi.x, "Evaluation point(s), comma separated");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"a", chi.a}, {"a_im", chi.a_im}, {"test", chi.test}, {"x", chi.x}};
    action = [&] { return run_chi(chi); };
  });

  BoundsArgs bnd;
  s = app.add_subcommand("bounds", "Pointwise spectral-measure bounds with grid refinement");
  s->add_option("--n", bnd.n, "Even boundary dimension");
  s->add_option("--regime", bnd.regime, "low or high");
  s->add_option("--j", bnd.j, "Derivative orders, comma separated");
  s->add_flag("--deriv", bnd.deriv, "Check |(d/dsigma)^j dE| <= C sigma instead");
  s->add_option("--base-count", bnd.base_count, "Points per axis on the coarsest grid");
  s->add_option("--refinements", bnd.refinements, "Grid doublings");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"n", bnd.n}, {"regime", bnd.regime}, {"j", bnd.j}, {"deriv", bnd.deriv},
                   {"base_count", bnd.base_count}, {"refinements", bnd.refinements}};
    action = [&] { return run_bounds(bnd); };
  });

  RestrictionArgs res;
  s = app.add_subcommand("restriction", "L1 -> Linf norm of dE(sigma) and its growth exponent");
  s->add_option("--n", res.n, "Even boundary dimension");
  s->add_option("--sigma", res.sigma, "sigma grid lo:hi:lin|log:count");
  s->add_option("--tolerance", res.tolerance, "Allowed |slope - n|");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"n", res.n}, {"sigma", res.sigma}, {"tolerance", res.tolerance}};
    action = [&] { return run_restriction(res); };
  });

  MultiplierArgs mul;
  s = app.add_subcommand("multiplier", "Kernel of F(alpha P), or its far-diagonal norm over several alpha");
  s->add_option("--n", mul.n, "Even boundary dimension");
  s->add_option("--F", mul.F, "zero, gaussian:w=, poly:m=, plateau:a=, bump:s=,levels=,seed=");
  s->add_option("--alpha", mul.alpha, "Scale in (0, 1]");
  s->add_option("--alphas", mul.alphas, "Comma separated scales: report far-diagonal uniformity instead");
  s->add_option("--r-grid", mul.r_grid, "lo:hi:lin|log:count");
  s->add_option("--checks", mul.checks, "Spot checks against adaptive quadrature");
  s->add_option("--seed", mul.seed, "Seed choosing the spot-check radii");
  add_common(s, common);
  s->callback([&] {
    info.seed = mul.seed;
    info.config = {{"n", mul.n}, {"F", mul.F}, {"alpha", mul.alpha}, {"alphas", mul.alphas}, {"r_grid", mul.r_grid},
                   {"checks", mul.checks}};
    action = [&] { return run_multiplier(mul); };
  });

  FgTailArgs fg;
  s = app.add_subcommand("fgtail", "Fourier tail of theta(s) s^m F(s) and its decay exponent");
  s->add_option("--m", fg.m, "Homogeneity m > 0");
  s->add_option("--R", fg.R, "Tail start points, comma separated");
  s->add_option("--F", fg.F, "Multiplier name as for the multiplier command");
  s->add_option("--slope-tolerance", fg.slope_tolerance, "Allowed |slope + 2m + 1|");
  add_common(s, common);
  s->callback([&] {
    info.config = {{"m", fg.m}, {"R", fg.R}, {"F", fg.F}, {"slope_tolerance", fg.slope_tolerance}};
    action = [&] { return run_fgtail(fg); };
  });

  ReportArgs rep;
  s = app.add_subcommand("report", "Run one acceptance criterion");
  s->add_option("--criterion", rep.criterion, "Criterion number 1..15")->required();
  add_common(s, common);
  s->callback([&] {
    info.config = {{"criterion", rep.criterion}};
    action = [&] { return run_report(rep); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kUsage;
  }

  for (const auto* sub : app.get_subcommands()) info.command = sub->get_name();
  info.timestamp = common.timestamp;
  try {
    return emit(info, action(), common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const hypspec::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const hypspec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const hypspec::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << " (best residual " << format_number(e.best_residual()) << ")\n";
    return kNumerical;
  } catch (const hypspec::ResolutionError& e) {
    std::cerr << "numerical failure: " << e.what() << " (needs " << e.required_samples() << " samples)\n";
    return kNumerical;
  } catch (const hypspec::TruncationError& e) {
    std::cerr << "numerical failure: " << e.what() << " (tail " << format_number(e.tail_estimate()) << ")\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}
