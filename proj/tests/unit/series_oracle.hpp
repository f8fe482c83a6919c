#pragma once

// Truncated Taylor series in eps about a point r0. Used to apply
// D = -(1/2pi) (1/sinh r) d/dr numerically exactly, without the symbolic
// u/v machinery of the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct Series {
  std::vector<cplx> c;
  explicit Series(std::size_t n = 0) : c(n) {}
  std::size_t size() const { return c.size(); }
};

inline Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

inline Series reciprocal(const Series& a) {
  Series out(a.size());
  out.c[0] = 1.0 / a.c[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= m; ++j) acc += a.c[j] * out.c[m - j];
    out.c[m] = -acc / a.c[0];
  }
  return out;
}

inline Series derivative(const Series& a) {
  Series out(a.size() - 1);
  for (std::size_t m = 1; m < a.size(); ++m) out.c[m - 1] = a.c[m] * static_cast<double>(m);
  return out;
}

// exp of a series with a.c[0] handled separately
inline Series exp_series(const Series& a) {
  Series out(a.size());
  out.c[0] = std::exp(a.c[0]);
  for (std::size_t m = 1; m < a.size(); ++m) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= m; ++j) acc += static_cast<double>(j) * a.c[j] * out.c[m - j];
    out.c[m] = acc / static_cast<double>(m);
  }
  return out;
}

inline Series sinh_series(double r0, std::size_t n) {
  Series s(n);
  double fact = 1.0;
  for (std::size_t m = 0; m < n; ++m) {
    if (m > 0) fact *= static_cast<double>(m);
    s.c[m] = (m % 2 == 0 ? std::sinh(r0) : std::cosh(r0)) / fact;
  }
  return s;
}

// e^{i sigma (r0 + eps)}
inline Series plane_wave(cplx sigma, double r0, std::size_t n) {
  Series a(n);
  a.c[0] = cplx(0.0, 1.0) * sigma * r0;
  if (n > 1) a.c[1] = cplx(0.0, 1.0) * sigma;
  return exp_series(a);
}

// e^{-(r0 + eps)^2 / (4t)} / sqrt(2t)
inline Series heat_profile(double t, double r0, std::size_t n) {
  Series a(n);
  a.c[0] = -r0 * r0 / (4.0 * t);
  if (n > 1) a.c[1] = -2.0 * r0 / (4.0 * t);
  if (n > 2) a.c[2] = -1.0 / (4.0 * t);
  Series e = exp_series(a);
  for (auto& v : e.c) v /= std::sqrt(2.0 * t);
  return e;
}

inline Series apply_D(const Series& g, double r0) {
  Series d = derivative(g);
  Series inv = reciprocal(sinh_series(r0, d.size()));
  Series out = mul(d, inv);
  for (auto& v : out.c) v *= -1.0 / (2.0 * std::numbers::pi);
  return out;
}

inline cplx apply_D_power(Series g, double r0, int k) {
  for (int i = 0; i < k; ++i) g = apply_D(g, r0);
  return g.c[0];
}

// (1/pi) D^k e^{i sigma r} at r0; its real part is dE for n = 2k.
inline cplx complex_measure(int n, cplx sigma, double r0) {
  return apply_D_power(plane_wave(sigma, r0, 32), r0, n / 2) / std::numbers::pi;
}

}  // namespace oracle
