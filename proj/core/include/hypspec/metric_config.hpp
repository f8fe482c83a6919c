#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hypspec/hypgeo.hpp"

namespace hypspec {

enum class MetricKind { hyperbolic, perturbed, warped };

// Plain-text metric description, one key=value per line, '#' starts a comment:
//   metric.kind = perturbed
//   metric.n = 2
//   metric.bump.amplitude = 0.05
//   metric.bump.center = 0.5,0,0
//   metric.bump.radius = 0.5
//   metric.warp = sinh_plus_gaussian
//   flow.epsilon = 0.05
struct MetricConfig {
  MetricKind kind = MetricKind::hyperbolic;
  int n = 2;
  BumpParams bump;
  std::string warp = "sinh";
  double epsilon = 0.05;

  static MetricConfig parse(std::istream& in);
  static MetricConfig load(const std::string& path);
  static MetricConfig from_pairs(const std::map<std::string, std::string>& kv);

  // Ordered key/value echo, used in report envelopes.
  std::map<std::string, std::string> echo() const;
};

HalfSpaceMetric make_halfspace_metric(const MetricConfig& config);
WarpedMetric make_warped_metric(const MetricConfig& config);

std::string to_string(MetricKind kind);

}  // namespace hypspec
