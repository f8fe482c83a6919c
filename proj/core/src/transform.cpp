#include "hypspec/transform.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/oscillatory.hpp"
#include "hypspec/parallel.hpp"
#include "hypspec/symbolic.hpp"

namespace hypspec {

namespace {

using std::numbers::pi;

SplineFilon radial_sine_spline(const RadialProfile& kappa) {
  std::vector<double> t{0.0};
  std::vector<double> g{0.0};
  t.reserve(kappa.r.size() + 1);
  g.reserve(kappa.r.size() + 1);
  for (std::size_t i = 0; i < kappa.r.size(); ++i) {
    t.push_back(kappa.r[i]);
    g.push_back(kappa.values[i] * std::sinh(kappa.r[i]));
  }
  return SplineFilon(std::move(t), std::move(g));
}

void check_tail(const RadialProfile& kappa, double tolerance) {
  double peak = 0.0, tail = 0.0;
  const double r_end = kappa.r.back();
  for (std::size_t i = 0; i < kappa.r.size(); ++i) {
    const double g = std::abs(kappa.values[i] * std::sinh(kappa.r[i]));
    peak = std::max(peak, g);
    if (kappa.r[i] >= 0.95 * r_end) tail = std::max(tail, g);
  }
  if (peak > 0.0 && tail > tolerance * peak) {
    throw TruncationError("spherical transform: profile has not decayed at the end of the grid", tail / peak);
  }
}

}  // namespace

RadialProfile RadialProfile::sample(const std::vector<double>& r, const std::function<double(double)>& f, int n) {
  RadialProfile p;
  p.r = r;
  p.n = n;
  p.values.reserve(r.size());
  for (double x : r) p.values.push_back(f(x));
  p.validate();
  return p;
}

void RadialProfile::validate() const {
  if (r.size() < 3 || values.size() != r.size()) throw ContractError("RadialProfile: need >= 3 samples with values");
  if (!(r.front() > 0.0)) throw ContractError("RadialProfile: grid must be positive");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) throw ContractError("RadialProfile: grid must increase strictly");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw ContractError("RadialProfile: values must be finite");
  }
}

std::vector<double> default_radial_grid(std::size_t count, double r_max) { return logspace(1e-3, r_max, count); }

double spherical_function_h3(double sigma, double r) {
  if (!(r >= 0.0) || !(sigma >= 0.0)) throw DomainError("spherical_function_h3: sigma and r must be nonnegative");
  if (r < 1e-5) return 1.0 - (sigma * sigma + 1.0) * r * r / 6.0;
  const double v = coth_csch(r).second;
  if (sigma * r < 1e-5) return r * v * (1.0 - sigma * sigma * r * r / 6.0);
  return std::sin(sigma * r) * v / sigma;
}

SpectralProfile spherical_transform_h3(const RadialProfile& kappa, const TransformOptions& options) {
  kappa.validate();
  if (kappa.n != 2) throw ContractError("spherical transform is implemented for H^3 (n = 2) only");
  if (!(options.sigma_max > 0.0) || options.sigma_count < 3) throw ContractError("transform: bad sigma grid");
  if (options.check_tail) check_tail(kappa, options.tail_tolerance);

  const SplineFilon spline = radial_sine_spline(kappa);
  SpectralProfile out;
  out.sigma = linspace(0.0, options.sigma_max, options.sigma_count);
  out.values.resize(out.sigma.size());
  const double d_sigma = options.sigma_max / static_cast<double>(options.sigma_count - 1);
  const auto f = spline.fourier_grid(d_sigma, options.sigma_count);
  for (std::size_t j = 1; j < f.size(); ++j) out.values[j] = 4.0 * pi * f[j].imag() / out.sigma[j];
  // sigma -> 0 limit
  const double eps = 1e-6 / kappa.r.back();
  out.values[0] = 4.0 * pi * spline.sine(eps) / eps;
  return out;
}

RadialProfile inverse_spherical_transform_h3(const SpectralProfile& spectrum, const std::vector<double>& r) {
  if (spectrum.sigma.size() < 3 || spectrum.values.size() != spectrum.sigma.size()) {
    throw ContractError("inverse transform: malformed spectral profile");
  }
  if (spectrum.sigma.front() != 0.0) throw ContractError("inverse transform: sigma grid must start at 0");
  std::vector<double> s(spectrum.sigma.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = spectrum.sigma[j] * spectrum.values[j] / (4.0 * pi);
  const SplineFilon spline(spectrum.sigma, s);

  RadialProfile out;
  out.r = r;
  out.values.resize(r.size());
  const auto f = spline.fourier_many(r);
  for (std::size_t i = 0; i < r.size(); ++i) out.values[i] = 2.0 / pi * coth_csch(r[i]).second * f[i].imag();
  out.validate();
  return out;
}

RadialProfile radial_convolve(const RadialProfile& k1, const RadialProfile& k2, const TransformOptions& options,
                              const std::vector<double>& out_r) {
  k1.validate();
  k2.validate();
  if (k1.r != k2.r || k1.n != k2.n) throw ContractError("radial_convolve: profiles must share one grid");
  const auto a = spherical_transform_h3(k1, options);
  const auto b = spherical_transform_h3(k2, options);
  SpectralProfile prod = a;
  for (std::size_t j = 0; j < prod.values.size(); ++j) prod.values[j] *= b.values[j];
  return inverse_spherical_transform_h3(prod, out_r.empty() ? k1.r : out_r);
}

double radial_convolve_direct(const std::function<double(double)>& k1, const std::function<double(double)>& k2,
                              double rho, double r_max, double tol) {
  if (!(rho > 0.0)) throw DomainError("radial_convolve_direct: rho must be positive");
  using boost::math::quadrature::gauss_kronrod;
  auto inner = [&](double r) {
    if (r <= 0.0) return 0.0;
    auto f = [&](double s) { return k1(s) * std::sinh(s); };
    const double lo = std::abs(rho - r);
    const double hi = rho + r;
    return k2(r) * std::sinh(r) * gauss_kronrod<double, 31>::integrate(f, lo, hi, 10, tol);
  };
  // split where |rho - r| has its kink
  const double mid = std::min(rho, r_max);
  double total = gauss_kronrod<double, 31>::integrate(inner, 0.0, mid, 10, tol);
  if (r_max > mid) total += gauss_kronrod<double, 31>::integrate(inner, mid, r_max, 10, tol);
  return 2.0 * pi * total / std::sinh(rho);
}

double l2_norm_h3(const RadialProfile& kappa) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < kappa.r.size(); ++i) {
    const double fa = kappa.values[i] * std::sinh(kappa.r[i]);
    const double fb = kappa.values[i + 1] * std::sinh(kappa.r[i + 1]);
    acc += 0.5 * (fa * fa + fb * fb) * (kappa.r[i + 1] - kappa.r[i]);
  }
  return std::sqrt(4.0 * pi * acc);
}

double l2_distance_h3(const RadialProfile& a, const RadialProfile& b) {
  if (a.r != b.r) throw ContractError("l2_distance_h3: profiles must share one grid");
  RadialProfile d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
  return l2_norm_h3(d);
}

}  // namespace hypspec
