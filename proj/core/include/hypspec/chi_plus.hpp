#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>

namespace hypspec {

// Test function with derivatives: derivative(k, x) = f^{(k)}(x) for k <= max_order,
// and f vanishes outside [lo, hi].
struct TestFunction {
  std::string name;
  std::function<double(int, double)> derivative;
  int max_order = 0;
  double lo = -1.0;
  double hi = 1.0;

  double operator()(double x) const { return derivative(0, x); }
};

// e^{-x^2}, every order, treated as supported in [-10, 10].
TestFunction gaussian_test_function();
// (1 - x^2)^m on [-1, 1], derivatives up to order m.
TestFunction polynomial_bump(int m);
// f^{(k)} as a test function in its own right.
TestFunction derivative_of(const TestFunction& f, int k);
// Parses "gaussian" or "bump:m=4".
TestFunction test_function_from_name(const std::string& name);

// chi_+^a(x) = x_+^a / Gamma(a + 1) for Re a > -1.
std::complex<double> chi_plus_eval(std::complex<double> a, double x);

// (chi_+^a * f)(x) = (chi_+^{a+k} * f^{(k)})(x), k = max(0, ceil(-Re a)).
std::complex<double> chi_plus_pair(std::complex<double> a, const TestFunction& f, double x,
                                   double tol = 1e-12);

// Pairs both sides of chi_+^mu * chi_+^nu = chi_+^{mu+nu+1} with f at x.
// The left side is a nested integral (inner convolution evaluated by quadrature).
std::pair<std::complex<double>, std::complex<double>> chi_plus_semigroup(double mu, double nu,
                                                                         const TestFunction& f, double x);

// (|1 / Gamma(1 + i s)|, e^{pi |s| / 2}).
std::pair<double, double> gamma_multiplier_bound(double s);

}  // namespace hypspec
