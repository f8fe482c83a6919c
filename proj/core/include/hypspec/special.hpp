#pragma once

#include <complex>
#include <vector>

namespace hypspec {

// log Gamma on the complex plane (principal branch away from the poles).
std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<double> gamma_complex(std::complex<double> z);
std::complex<double> reciprocal_gamma(std::complex<double> z);

// Physicists' Hermite polynomials H_0..H_m at x.
std::vector<double> hermite_values(int m, double x);

// d^j/dr^j exp(-a r^2) for j = 0..m.
std::vector<double> gaussian_derivatives(double a, double r, int m);

}  // namespace hypspec
