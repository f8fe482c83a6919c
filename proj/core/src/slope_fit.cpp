#include "hypspec/slope_fit.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "hypspec/errors.hpp"

namespace hypspec {

SlopeFit fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ContractError("fit_slope: xs and ys differ in length");
  const std::size_t m = xs.size();
  if (m < 8) throw ContractError("fit_slope: need at least 8 points");
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw ContractError("fit_slope: non-finite data");
  }
  SlopeFit fit;
  fit.xs.assign(xs.begin(), xs.end());
  fit.ys.assign(ys.begin(), ys.end());

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw ContractError("fit_slope: xs are all equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss += e * e;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(m));
  const double dof = static_cast<double>(m - 2);
  boost::math::students_t dist(dof);
  const double tq = boost::math::quantile(boost::math::complement(dist, 0.025));
  fit.confidence_halfwidth = tq * std::sqrt(ss / dof / sxx);
  return fit;
}

SlopeFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ContractError("fit_loglog: xs and ys differ in length");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw ContractError("fit_loglog: values must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_slope(lx, ly);
}

}  // namespace hypspec
