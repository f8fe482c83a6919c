#include "hypspec/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) throw DomainError("lgamma: pole");
    // reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_complex(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

std::complex<double> gamma_complex(std::complex<double> z) { return std::exp(lgamma_complex(z)); }

std::complex<double> reciprocal_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) return 0.0;
  return std::exp(-lgamma_complex(z));
}

std::vector<double> hermite_values(int m, double x) {
  if (m < 0) throw ContractError("hermite_values: negative order");
  std::vector<double> h(static_cast<std::size_t>(m) + 1);
  h[0] = 1.0;
  if (m >= 1) h[1] = 2.0 * x;
  for (int k = 1; k < m; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    h[uk + 1] = 2.0 * x * h[uk] - 2.0 * k * h[uk - 1];
  }
  return h;
}

std::vector<double> gaussian_derivatives(double a, double r, int m) {
  if (!(a > 0.0)) throw DomainError("gaussian_derivatives: a must be positive");
  const double s = std::sqrt(a);
  const auto h = hermite_values(m, s * r);
  const double g = std::exp(-a * r * r);
  std::vector<double> out(h.size());
  double scale = 1.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    out[j] = scale * h[j] * g;
    scale *= -s;
  }
  return out;
}

}  // namespace hypspec
