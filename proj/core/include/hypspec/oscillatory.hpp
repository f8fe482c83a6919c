#pragma once

#include <complex>
#include <vector>

namespace hypspec {

// Natural cubic spline through (t_i, g_i), integrated exactly against e^{i w t}
// (Filon-type quadrature). Accuracy depends only on how well the spline
// resolves g, not on the oscillation frequency w.
class SplineFilon {
 public:
  SplineFilon(std::vector<double> t, std::vector<double> g);

  // ∫_{t_0}^{t_N} s(t) e^{i w t} dt
  std::complex<double> fourier(double w) const;
  double sine(double w) const { return fourier(w).imag(); }
  double cosine(double w) const { return fourier(w).real(); }
  double value(double t) const;

  // fourier(j * dw) for j = 0..count-1, in one pass over the intervals.
  std::vector<std::complex<double>> fourier_grid(double dw, std::size_t count) const;
  // fourier(w) for every w in ws; fast when the nodes are uniformly spaced.
  std::vector<std::complex<double>> fourier_many(const std::vector<double>& ws) const;

  const std::vector<double>& nodes() const noexcept { return t_; }

 private:
  std::vector<double> t_;
  bool uniform_ = false;
  // per-interval polynomial coefficients in tau = t - t_i
  std::vector<double> c0_, c1_, c2_, c3_;
};

// ∫_0^1 x^m e^{i theta x} dx for m = 0..3.
void unit_moments(double theta, std::complex<double> out[4]);

}  // namespace hypspec
