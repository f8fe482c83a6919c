#include "hypspec/oscillatory.hpp"

#include <algorithm>
#include <cmath>

#include "hypspec/errors.hpp"
#include "hypspec/parallel.hpp"

namespace hypspec {

void unit_moments(double theta, std::complex<double> out[4]) {
  using cplx = std::complex<double>;
  if (std::abs(theta) < 0.5) {
    // sum_k (i theta)^k / (k! (m + k + 1))
    for (int m = 0; m < 4; ++m) out[m] = 0.0;
    cplx term = 1.0;
    for (int k = 0; k < 16; ++k) {
      for (int m = 0; m < 4; ++m) out[m] += term / static_cast<double>(m + k + 1);
      term *= cplx(0.0, theta) / static_cast<double>(k + 1);
      if (std::abs(term.real()) + std::abs(term.imag()) < 1e-17) break;
    }
    return;
  }
  const cplx e = std::exp(cplx(0.0, theta));
  const cplx inv = 1.0 / cplx(0.0, theta);
  out[0] = (e - 1.0) * inv;
  for (int m = 1; m < 4; ++m) out[m] = (e - static_cast<double>(m) * out[m - 1]) * inv;
}

namespace {

// unit_moments with e^{i theta} supplied by the caller.
inline void unit_moments_with(double theta, std::complex<double> e, std::complex<double> out[4]) {
  using cplx = std::complex<double>;
  if (std::abs(theta) < 0.5) {
    unit_moments(theta, out);
    return;
  }
  const cplx inv(0.0, -1.0 / theta);
  out[0] = (e - 1.0) * inv;
  out[1] = (e - out[0]) * inv;
  out[2] = (e - 2.0 * out[1]) * inv;
  out[3] = (e - 3.0 * out[2]) * inv;
}

constexpr std::size_t kReseed = 256;

}  // namespace

SplineFilon::SplineFilon(std::vector<double> t, std::vector<double> g) : t_(std::move(t)) {
  const std::size_t n = t_.size();
  if (n < 3 || g.size() != n) throw ContractError("SplineFilon: need at least 3 matching samples");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(t_[i] > t_[i - 1])) throw ContractError("SplineFilon: nodes must increase strictly");
  }
  // natural spline second derivatives by the tridiagonal (Thomas) algorithm
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = t_[i + 1] - t_[i];
  std::vector<double> m2(n, 0.0), diag(n, 1.0), rhs(n, 0.0), upper(n, 0.0), lower(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    lower[i] = h[i - 1];
    diag[i] = 2.0 * (h[i - 1] + h[i]);
    upper[i] = h[i];
    rhs[i] = 6.0 * ((g[i + 1] - g[i]) / h[i] - (g[i] - g[i - 1]) / h[i - 1]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m2[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m2[i] = (rhs[i] - upper[i] * m2[i + 1]) / diag[i];

  c0_.resize(n - 1);
  c1_.resize(n - 1);
  c2_.resize(n - 1);
  c3_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c0_[i] = g[i];
    c1_[i] = (g[i + 1] - g[i]) / h[i] - h[i] * (2.0 * m2[i] + m2[i + 1]) / 6.0;
    c2_[i] = m2[i] / 2.0;
    c3_[i] = (m2[i + 1] - m2[i]) / (6.0 * h[i]);
  }
  const double span = t_.back() - t_.front();
  const double step = span / static_cast<double>(n - 1);
  uniform_ = true;
  for (std::size_t i = 0; i + 1 < n && uniform_; ++i) {
    if (std::abs(h[i] - step) > 1e-9 * step) uniform_ = false;
  }
}

std::vector<std::complex<double>> SplineFilon::fourier_grid(double dw, std::size_t count) const {
  using cplx = std::complex<double>;
  std::vector<cplx> out(count, 0.0);
  const std::size_t blocks = (count + kReseed - 1) / kReseed;
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t j0 = b * kReseed;
    const std::size_t j1 = std::min(count, j0 + kReseed);
    cplx mom[4];
    for (std::size_t i = 0; i < c0_.size(); ++i) {
      const double h = t_[i + 1] - t_[i];
      const double w0 = dw * static_cast<double>(j0);
      cplx phase = std::exp(cplx(0.0, w0 * t_[i]));
      cplx e = std::exp(cplx(0.0, w0 * h));
      const cplx dphase = std::exp(cplx(0.0, dw * t_[i]));
      const cplx de = std::exp(cplx(0.0, dw * h));
      for (std::size_t j = j0; j < j1; ++j) {
        const double theta = dw * static_cast<double>(j) * h;
        unit_moments_with(theta, e, mom);
        const cplx local =
            h * (c0_[i] * mom[0] + h * (c1_[i] * mom[1] + h * (c2_[i] * mom[2] + h * c3_[i] * mom[3])));
        out[j] += phase * local;
        phase *= dphase;
        e *= de;
      }
    }
  });
  return out;
}

std::vector<std::complex<double>> SplineFilon::fourier_many(const std::vector<double>& ws) const {
  using cplx = std::complex<double>;
  std::vector<cplx> out(ws.size());
  if (!uniform_) {
    parallel_for(ws.size(), [&](std::size_t k) { out[k] = fourier(ws[k]); });
    return out;
  }
  const double h = (t_.back() - t_.front()) / static_cast<double>(c0_.size());
  parallel_for(ws.size(), [&](std::size_t k) {
    const double w = ws[k];
    cplx mom[4];
    unit_moments(w * h, mom);
    const cplx m0 = h * mom[0], m1 = h * h * mom[1], m2 = h * h * h * mom[2], m3 = h * h * h * h * mom[3];
    const cplx step = std::exp(cplx(0.0, w * h));
    cplx total = 0.0;
    cplx phase;
    for (std::size_t i = 0; i < c0_.size(); ++i) {
      if (i % kReseed == 0) phase = std::exp(cplx(0.0, w * (t_.front() + h * static_cast<double>(i))));
      total += phase * (c0_[i] * m0 + c1_[i] * m1 + c2_[i] * m2 + c3_[i] * m3);
      phase *= step;
    }
    out[k] = total;
  });
  return out;
}

std::complex<double> SplineFilon::fourier(double w) const {
  using cplx = std::complex<double>;
  cplx total = 0.0;
  cplx mom[4];
  for (std::size_t i = 0; i < c0_.size(); ++i) {
    const double h = t_[i + 1] - t_[i];
    unit_moments(w * h, mom);
    const cplx local = h * (c0_[i] * mom[0] + h * (c1_[i] * mom[1] + h * (c2_[i] * mom[2] + h * c3_[i] * mom[3])));
    total += std::exp(cplx(0.0, w * t_[i])) * local;
  }
  return total;
}

double SplineFilon::value(double t) const {
  if (t <= t_.front()) return c0_.front();
  if (t >= t_.back()) {
    const std::size_t i = c0_.size() - 1;
    const double tau = t_.back() - t_[i];
    return c0_[i] + tau * (c1_[i] + tau * (c2_[i] + tau * c3_[i]));
  }
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const auto i = static_cast<std::size_t>(it - t_.begin()) - 1;
  const double tau = t - t_[i];
  return c0_[i] + tau * (c1_[i] + tau * (c2_[i] + tau * c3_[i]));
}

}  // namespace hypspec
