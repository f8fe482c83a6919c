#include "hypspec/fg_tail.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fftw_lock.hpp"
#include "hypspec/errors.hpp"

namespace hypspec {

FgTail::FgTail(const Multiplier& F, double m, const FgTailOptions& options) : m_(m) {
  if (!(m > 0.0 && m <= 10.0)) throw DomainError("fg_tail: m must lie in (0, 10]");
  if (options.samples < 16 || options.pad < 16) throw ContractError("fg_tail: need samples >= 16 and pad >= 16");
  const std::size_t n = options.samples;
  const std::size_t total = n * options.pad;
  const double h = 1.0 / static_cast<double>(n);
  dr_ = 2.0 * std::numbers::pi / (static_cast<double>(total) * h);
  r_cut_ = options.r_cut;
  const double r_nyquist = std::numbers::pi / h;
  if (r_cut_ > r_nyquist / 8.0) {
    throw ResolutionError("fg_tail: r_cut too close to the sampling limit",
                          static_cast<std::size_t>(std::ceil(8.0 * r_cut_ / std::numbers::pi)));
  }
  auto phi = options.phi ? options.phi : [](double) { return 1.0; };

  fftw_complex* buf = fftw_alloc_complex(total);
  fftw_plan plan;
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(total), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (std::size_t j = 0; j < total; ++j) {
    double value = 0.0;
    if (j <= n) {
      const double s = h * static_cast<double>(j);
      value = std::pow(s, m) * phi(s) * F(s);
      if (j == n) value *= 0.5;  // trapezoid end weight (H(0) = 0 already)
    }
    buf[j][0] = value;
    buf[j][1] = 0.0;
  }
  fftw_execute(plan);
  const double scale = h / std::sqrt(2.0 * std::numbers::pi);
  const auto kmax = static_cast<std::size_t>(std::floor(r_cut_ / dr_));
  power_.resize(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::complex<double> v(buf[k][0], buf[k][1]);
    power_[k] = std::norm(scale * v);
  }
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);

  cumulative_.assign(kmax + 1, 0.0);
  for (std::size_t k = kmax; k-- > 0;) cumulative_[k] = cumulative_[k + 1] + 0.5 * (power_[k] + power_[k + 1]) * dr_;
  // H ~ c sigma^m near 0 gives |H^(r)| ~ |c| Gamma(m + 1) r^{-m-1} / sqrt(2 pi)
  const double c = phi(0.0) * F(0.0) * std::tgamma(m + 1.0);
  remainder_coeff_ = c * c / (2.0 * std::numbers::pi);
}

double FgTail::tail(double R) const {
  if (!(R >= 1.0)) throw DomainError("fg_tail: R must be at least 1");
  if (R > r_cut_ / 4.0) {
    throw ResolutionError("fg_tail: R too large for the padded grid",
                          static_cast<std::size_t>(std::ceil(4.0 * R / dr_)));
  }
  const double x = R / dr_;
  const auto k = static_cast<std::size_t>(x);
  const double t = x - static_cast<double>(k);
  // partial cell [R, (k+1) dr]: cubic through samples k-1..k+2, 3-point Gauss
  const double f0 = power_[k - 1], f1 = power_[k], f2 = power_[k + 1], f3 = power_[k + 2];
  auto cubic = [&](double u) {
    return -f0 * u * (u - 1.0) * (u - 2.0) / 6.0 + f1 * (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0 -
           f2 * (u + 1.0) * u * (u - 2.0) / 2.0 + f3 * (u + 1.0) * u * (u - 1.0) / 6.0;
  };
  const double mid = 0.5 * (1.0 + t), half = 0.5 * (1.0 - t);
  const double g = std::sqrt(0.6);
  double total = half * dr_ * (5.0 * cubic(mid - g * half) + 8.0 * cubic(mid) + 5.0 * cubic(mid + g * half)) / 9.0;
  // trapezoid from (k+1) dr to r_cut with the Euler-Maclaurin end correction
  const std::size_t j = k + 1, last = power_.size() - 1;
  const double da = (power_[j + 1] - power_[j - 1]) / (2.0 * dr_);
  const double db = (power_[last] - power_[last - 1]) / dr_;
  total += cumulative_[j] + dr_ * dr_ / 12.0 * (da - db);
  const double p = 2.0 * m_ + 1.0;
  total += remainder_coeff_ * std::pow(r_cut_, -p) / p;
  return total;
}

double fg_tail(const Multiplier& F, double m, double R, const FgTailOptions& options) {
  return FgTail(F, m, options).tail(R);
}

}  // namespace hypspec
