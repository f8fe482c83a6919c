#include "hypspec/chi_plus.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "hypspec/errors.hpp"
#include "hypspec/special.hpp"

namespace hypspec {

namespace {

using cplx = std::complex<double>;

int shift_order(cplx a) { return std::max(0, static_cast<int>(std::ceil(-a.real()))); }

cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  // integrate over [0, b - a] so abscissae never round onto a nonzero endpoint
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double len = b - a;
  const double re = integrator.integrate([&](double t) { return f(a + t).real(); }, 0.0, len, tol);
  const double im = integrator.integrate([&](double t) { return f(a + t).imag(); }, 0.0, len, tol);
  return {re, im};
}

}  // namespace

TestFunction gaussian_test_function() {
  TestFunction f;
  f.name = "gaussian";
  f.max_order = 64;
  f.lo = -10.0;
  f.hi = 10.0;
  f.derivative = [](int k, double x) {
    if (std::abs(x) > 10.0) return 0.0;
    return gaussian_derivatives(1.0, x, k)[static_cast<std::size_t>(k)];
  };
  return f;
}

TestFunction polynomial_bump(int m) {
  if (m < 1) throw ContractError("polynomial_bump: m must be at least 1");
  // coefficients of (1 - x^2)^m in powers of x
  std::vector<double> coeffs(static_cast<std::size_t>(2 * m) + 1, 0.0);
  double binom = 1.0;
  for (int i = 0; i <= m; ++i) {
    coeffs[static_cast<std::size_t>(2 * i)] = (i % 2 == 0 ? 1.0 : -1.0) * binom;
    binom = binom * (m - i) / (i + 1);
  }
  TestFunction f;
  f.name = "bump:m=" + std::to_string(m);
  f.max_order = m;
  f.lo = -1.0;
  f.hi = 1.0;
  f.derivative = [coeffs](int k, double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    double acc = 0.0;
    for (std::size_t p = coeffs.size(); p-- > static_cast<std::size_t>(k);) {
      double falling = 1.0;
      for (int i = 0; i < k; ++i) falling *= static_cast<double>(p) - i;
      acc = acc * x + coeffs[p] * falling;
    }
    return acc;
  };
  return f;
}

TestFunction derivative_of(const TestFunction& f, int k) {
  if (k < 0 || k > f.max_order) throw ContractError("derivative_of: order not available for " + f.name);
  TestFunction g = f;
  g.name = f.name + "^(" + std::to_string(k) + ")";
  g.max_order = f.max_order - k;
  g.derivative = [inner = f.derivative, k](int j, double x) { return inner(j + k, x); };
  return g;
}

TestFunction test_function_from_name(const std::string& name) {
  if (name == "gaussian") return gaussian_test_function();
  if (name.rfind("bump", 0) == 0) {
    int m = 4;
    const auto pos = name.find("m=");
    if (pos != std::string::npos) m = std::stoi(name.substr(pos + 2));
    return polynomial_bump(m);
  }
  throw ContractError("unknown test function '" + name + "' (expected gaussian or bump:m=<int>)");
}

cplx chi_plus_eval(cplx a, double x) {
  if (!(a.real() > -1.0)) throw ContractError("chi_plus_eval needs Re a > -1; use chi_plus_pair for lower orders");
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (a == cplx(0.0, 0.0)) return 1.0;
    if (a.real() > 0.0) return 0.0;
    throw DomainError("chi_plus_eval: x_+^a is singular at x = 0 for this order");
  }
  return std::exp(a * std::log(x) - lgamma_complex(a + 1.0));
}

cplx chi_plus_pair(cplx a, const TestFunction& f, double x, double tol) {
  const int k = shift_order(a);
  if (k > f.max_order) {
    throw ContractError("chi_plus_pair: test function " + f.name + " lacks derivative order " + std::to_string(k));
  }
  const cplx b = a + static_cast<double>(k);
  if (b == cplx(0.0, 0.0)) {
    // Heaviside: running integral of f^{(k)}, i.e. f^{(k-1)}(x) for k >= 1
    if (k >= 1) return f.derivative(k - 1, x);
  }
  // ∫_0^∞ chi^b(y) f^{(k)}(x - y) dy over the support y in [x - hi, x - lo]
  const double y0 = std::max(0.0, x - f.hi);
  const double y1 = x - f.lo;
  const cplx norm = std::exp(-lgamma_complex(b + 1.0));
  auto integrand = [&](double y) -> cplx {
    const double fy = f.derivative(k, x - y);
    if (fy == 0.0 || y <= 0.0) return 0.0;
    return std::exp(b * std::log(y)) * fy;
  };
  return norm * integrate_complex(integrand, y0, y1, tol);
}

std::pair<cplx, cplx> chi_plus_semigroup(double mu, double nu, const TestFunction& f, double x) {
  const double total = mu + nu + 1.0;
  const cplx rhs = chi_plus_pair(total, f, x);
  // lhs = ∫ chi^{mu+k}(y) (chi^nu * f^{(k)})(x - y) dy
  const int k = shift_order(mu);
  const TestFunction fk = derivative_of(f, k);
  const double b = mu + k;
  const double y1 = x - f.lo;
  if (!(y1 > 0.0)) return {0.0, rhs};
  auto inner = [&](double y) -> cplx {
    if (y <= 0.0) return 0.0;
    return std::pow(y, b) * chi_plus_pair(nu, fk, x - y, 1e-10);
  };
  cplx lhs;
  if (b == 0.0) {
    lhs = integrate_complex(inner, 0.0, y1, 1e-9);
  } else {
    lhs = integrate_complex(inner, 0.0, y1, 1e-9) / std::tgamma(b + 1.0);
  }
  return {lhs, rhs};
}

std::pair<double, double> gamma_multiplier_bound(double s) {
  const double lhs = std::exp(-lgamma_complex(cplx(1.0, s)).real());
  const double rhs = std::exp(std::numbers::pi * std::abs(s) / 2.0);
  return {lhs, rhs};
}

}  // namespace hypspec
