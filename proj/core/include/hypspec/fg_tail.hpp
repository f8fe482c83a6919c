#pragma once

#include <functional>
#include <vector>

#include "hypspec/multiplier.hpp"

namespace hypspec {

struct FgTailOptions {
  std::size_t samples = 1 << 16;  // intervals on [0, 1]
  std::size_t pad = 32;           // zero padding factor of the FFT, at least 16
  double r_cut = 4096.0;          // numerical tail stops here; beyond it the asymptotic remainder is used
  std::function<double(double)> phi;  // smooth cutoff; empty means 1 on [0, 1]
};

// H(sigma) = theta(sigma) sigma^m phi(sigma) F(sigma) and
// H^(r) = (2 pi)^{-1/2} ∫ H(sigma) e^{i sigma r} dsigma (by FFT).
class FgTail {
 public:
  FgTail(const Multiplier& F, double m, const FgTailOptions& options = {});

  // ∫_{r >= R} |H^(r)|^2 dr.
  double tail(double R) const;
  double m() const noexcept { return m_; }

 private:
  double m_;
  double dr_;
  double r_cut_;
  double remainder_coeff_;  // |H^(r)|^2 ~ remainder_coeff_ r^{-2m-2}
  std::vector<double> power_;  // |H^(k dr)|^2 for k dr <= r_cut
  std::vector<double> cumulative_;  // trapezoid integral from k dr to r_cut
};

double fg_tail(const Multiplier& F, double m, double R, const FgTailOptions& options = {});

}  // namespace hypspec
