#pragma once

#include <span>
#include <vector>

namespace hypspec {

// Least-squares line ys ~ slope * xs + intercept.
struct SlopeFit {
  std::vector<double> xs;
  std::vector<double> ys;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  // Half-width of the 95% Student-t interval for the slope.
  double confidence_halfwidth = 0.0;
};

// Needs at least 8 finite points and two distinct xs.
SlopeFit fit_slope(std::span<const double> xs, std::span<const double> ys);

// Fits log(ys) against log(xs); all values must be positive.
SlopeFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

}  // namespace hypspec
