#include "hypspec/kernels.hpp"

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <mutex>
#include <numbers>

#include "hypspec/errors.hpp"
#include "hypspec/special.hpp"

namespace hypspec {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
constexpr int kMaxDeriv = 6;

int half_order(int n) {
  if (n < 2 || n > 20 || n % 2 != 0) {
    throw UnsupportedOrderError("kernels: n must be even with 2 <= n <= 20 (odd n is not supported)");
  }
  return n / 2;
}

void check_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("kernels: r must be positive and finite");
}

// Truncated Taylor series in sigma: c[i] = (d/dsigma)^i f / i!.
struct Jet {
  std::array<double, kMaxDeriv + 1> c{};

  Jet operator*(const Jet& o) const {
    Jet out;
    for (int i = 0; i <= kMaxDeriv; ++i)
      for (int l = 0; l <= i; ++l) out.c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(l)] * o.c[static_cast<std::size_t>(i - l)];
    return out;
  }
  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Jet scaled(double s) const {
    Jet out = *this;
    for (auto& x : out.c) x *= s;
    return out;
  }
  double max_abs() const {
    double m = 0.0;
    for (double x : c) m = std::max(m, std::abs(x));
    return m;
  }
};

// Near r = 0 write D = -(1/2pi) d/dw with w = cosh r and expand
// cos(sigma arccosh(1 + z)) = sum c_m z^m, c_{m+1} = -c_m (m^2 + sigma^2) / ((m+1)(2m+1)).
// Returns the sigma-jet of dE = (1/pi) (-1/2pi)^k f^{(k)}(z), z = cosh r - 1.
Jet spectral_series(int k, double sigma, double z) {
  Jet sigma2;
  sigma2.c[0] = sigma * sigma;
  sigma2.c[1] = 2.0 * sigma;
  sigma2.c[2] = 1.0;
  Jet cm;
  cm.c[0] = 1.0;
  Jet total;
  int small_terms = 0;
  for (int m = 0; m < 2000; ++m) {
    if (m >= k) {
      // m! / (m - k)! z^{m-k}
      double factor = 1.0;
      for (int i = 0; i < k; ++i) factor *= static_cast<double>(m - i);
      factor *= std::pow(z, m - k);
      const Jet term = cm.scaled(factor);
      total += term;
      if (term.max_abs() <= 1e-18 * total.max_abs()) {
        if (++small_terms >= 3) break;
      } else {
        small_terms = 0;
      }
    }
    Jet mm = sigma2;
    mm.c[0] += static_cast<double>(m) * m;
    cm = (cm * mm).scaled(-1.0 / ((m + 1.0) * (2.0 * m + 1.0)));
  }
  return total.scaled(std::pow(-1.0 / (2.0 * pi), k) / pi);
}

bool use_series(int k, double sigma, double r) {
  return r < 0.5 && std::abs(sigma) * r < 2.0 && (k >= 2 || r < 1e-12);
}

double factorial(int m) { return std::tgamma(m + 1.0); }

// Sum_j P_j(u, v) (i sigma)^{j - shift} times the prefactor, without the wave.
cplx symbol_sum(const SymbolicRadialKernel& sym, cplx sigma, double r, int shift) {
  const auto [u, v] = coth_csch(r);
  const cplx is = I * sigma;
  cplx sum = 0.0;
  for (const auto& t : sym.terms()) sum += t.poly.evaluate(u, v) * std::pow(is, t.j - shift);
  return sym.prefactor_value() * sum;
}

}  // namespace

const SymbolicRadialKernel& kernel_symbol(int n, int phase) {
  const int k = half_order(n);
  if (phase != 1 && phase != -1) throw ContractError("kernel_symbol: phase must be +1 or -1");
  static std::mutex mutex;
  static std::array<std::array<std::optional<SymbolicRadialKernel>, 11>, 2> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[phase > 0 ? 0 : 1][static_cast<std::size_t>(k)];
  if (!slot) slot = apply_D_power(SymbolicRadialKernel::plane_wave(phase), k);
  return *slot;
}

cplx resolvent_kernel(int n, cplx sigma, double r, std::optional<Side> side) {
  half_order(n);
  check_r(r);
  Side which;
  if (sigma.imag() > 0.0) which = Side::upper;
  else if (sigma.imag() < 0.0) which = Side::lower;
  else if (side) which = *side;
  else throw ContractError("resolvent_kernel: real sigma needs an explicit side");
  if (side && *side != which) throw ContractError("resolvent_kernel: side flag contradicts Im sigma");

  // Every term of D^k carries j >= 1, so (i sigma)^j / (i sigma) is a polynomial.
  if (which == Side::upper) {
    const auto& sym = kernel_symbol(n, 1);
    return -0.5 * std::exp(I * sigma * r) * symbol_sum(sym, sigma, r, 1);
  }
  const auto& sym = kernel_symbol(n, -1);
  return 0.5 * std::exp(-I * sigma * r) * symbol_sum(sym, sigma, r, 1);
}

double spectral_measure(int n, double sigma, double r) { return spectral_measure_deriv(n, 0, sigma, r); }

double spectral_measure_deriv(int n, int j, double sigma, double r) {
  const int k = half_order(n);
  if (j < 0 || j > kMaxDeriv) throw UnsupportedOrderError("spectral_measure_deriv: j must lie in [0, 6]");
  check_r(r);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("spectral_measure: sigma must be nonnegative");

  if (use_series(k, sigma, r)) {
    const double z = 2.0 * std::sinh(0.5 * r) * std::sinh(0.5 * r);
    return spectral_series(k, sigma, z).c[static_cast<std::size_t>(j)] * factorial(j);
  }

  const auto& sym = kernel_symbol(n, 1);
  const auto [u, v] = coth_csch(r);
  const cplx wave = std::exp(I * sigma * r);
  const cplx is = I * sigma;
  cplx sum = 0.0;
  for (const auto& t : sym.terms()) {
    // d^j/dsigma^j [e^{i sigma r} (i sigma)^p] = e^{i sigma r} sum_l C(j,l) (i r)^{j-l} i^l p!/(p-l)! (i sigma)^{p-l}
    const int p = t.j;
    cplx d = 0.0;
    for (int l = 0; l <= std::min(j, p); ++l) {
      const double binom = factorial(j) / (factorial(l) * factorial(j - l));
      const double falling = factorial(p) / factorial(p - l);
      d += binom * std::pow(I * r, j - l) * std::pow(I, l) * falling * std::pow(is, p - l);
    }
    sum += t.poly.evaluate(u, v) * d;
  }
  return (sym.prefactor_value() * wave * sum).real() / pi;
}

double spectral_measure_stone(int n, double sigma, double r) {
  const cplx plus = resolvent_kernel(n, sigma, r, Side::upper);
  const cplx minus = resolvent_kernel(n, sigma, r, Side::lower);
  return (sigma / (pi * I) * (plus - minus)).real();
}

double spectral_measure_at_origin(int n, int j, double sigma) {
  const int k = half_order(n);
  if (j < 0 || j > kMaxDeriv) throw UnsupportedOrderError("spectral_measure_at_origin: j must lie in [0, 6]");
  return spectral_series(k, sigma, 0.0).c[static_cast<std::size_t>(j)] * factorial(j);
}

double heat_kernel_recursion(int n, double t, double r) {
  const int k = half_order(n);
  check_r(r);
  if (!(t > 0.0)) throw DomainError("heat kernel: t must be positive");
  auto derivs = gaussian_derivatives(1.0 / (4.0 * t), r, k);
  for (auto& d : derivs) d /= std::sqrt(2.0 * t);
  return kernel_symbol(n, 1).evaluate_on(r, derivs) / std::sqrt(2.0 * pi);
}

double heat_kernel_spectral(int n, double t, double r) {
  half_order(n);
  check_r(r);
  if (!(t > 0.0)) throw DomainError("heat kernel: t must be positive");
  // dE is even in sigma, so the half-line integral is half the full line
  // integral of (1/pi) e^{-t sigma^2} D^k e^{i sigma r}. On sigma = tau + ic,
  // c = r/(2t), the exponent becomes -t tau^2 - r^2/(4t).
  const auto& sym = kernel_symbol(n, 1);
  const double c = r / (2.0 * t);
  auto integrand = [&](double tau) {
    const cplx sigma{tau, c};
    return (std::exp(-t * tau * tau) * symbol_sum(sym, sigma, r, 0)).real();
  };
  boost::math::quadrature::sinh_sinh<double> integrator;
  const double integral = integrator.integrate(integrand, 1e-14);
  return std::exp(-r * r / (4.0 * t)) * integral / (2.0 * pi);
}

double spectral_integral(int n, const std::function<double(double)>& F, double r, double sigma_max, double tol) {
  half_order(n);
  check_r(r);
  if (!(sigma_max > 0.0)) throw DomainError("spectral_integral: sigma_max must be positive");
  auto f = [&](double s) { return s == 0.0 ? 0.0 : F(s) * spectral_measure(n, s, r); };
  // split into pieces of a few oscillation periods each
  const int pieces = std::max(1, static_cast<int>(std::ceil(sigma_max * r / (4.0 * pi))));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = sigma_max * i / pieces;
    const double b = sigma_max * (i + 1) / pieces;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
  }
  return total;
}

double heat_kernel_h3(double t, double r) {
  check_r(r);
  if (!(t > 0.0)) throw DomainError("heat kernel: t must be positive");
  return std::pow(4.0 * pi * t, -1.5) * (r / std::sinh(r)) * std::exp(-r * r / (4.0 * t));
}

}  // namespace hypspec
