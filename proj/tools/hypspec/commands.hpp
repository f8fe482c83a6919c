#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"

namespace hypspec::cli {

// Bad flag values discovered after parsing (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeodesicArgs {
  std::string metric;
  std::string start;
  double t = 40.0;
  double tol = 1e-10;
  std::size_t samples = 401;
};

struct DistanceArgs {
  std::string metric;
  std::string p;
  std::string q;
  double tol = 1e-10;
  std::size_t extra_seeds = 0;
  std::uint64_t seed = 11;
};

struct NontrapArgs {
  std::string metric;
  std::size_t samples = 1000;
  double tmax = 100.0;
  double escape_x = 1e-3;
  double box = 1.0;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

struct KernelArgs {
  int n = 2;
  std::string what = "spectral";
  double sigma = 1.0;
  double sigma_im = 0.0;
  std::string side = "upper";
  std::string r_grid = "1e-3:30:log:200";
};

struct ChiArgs {
  double a = -1.0;
  double a_im = 0.0;
  std::string test = "gaussian";
  std::string x = "0";
};

struct BoundsArgs {
  int n = 2;
  std::string regime = "high";
  std::string j = "0,1,2";
  bool deriv = false;
  std::size_t base_count = 40;
  int refinements = 3;
};

struct RestrictionArgs {
  int n = 2;
  std::string sigma = "10:1000:log:24";
  double tolerance = 0.05;
};

struct MultiplierArgs {
  int n = 2;
  std::string F = "bump:s=1.6";
  double alpha = 0.25;
  std::string alphas;
  std::string r_grid = "0.01:40:log:400";
  std::size_t checks = 5;
  std::uint64_t seed = 9;
};

struct FgTailArgs {
  double m = 1.0;
  std::string R = "4,8,16,32,64";
  std::string F = "gaussian";
  double slope_tolerance = 0.3;
};

struct ReportArgs {
  int criterion = 0;
};

CommandOutput run_geodesic(const GeodesicArgs& a);
CommandOutput run_distance(const DistanceArgs& a);
CommandOutput run_nontrap(const NontrapArgs& a);
CommandOutput run_kernel(const KernelArgs& a);
CommandOutput run_chi(const ChiArgs& a);
CommandOutput run_bounds(const BoundsArgs& a);
CommandOutput run_restriction(const RestrictionArgs& a);
CommandOutput run_multiplier(const MultiplierArgs& a);
CommandOutput run_fgtail(const FgTailArgs& a);
CommandOutput run_report(const ReportArgs& a);

}  // namespace hypspec::cli
