#include "hypspec/multiplier.hpp"

#include <fftw3.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "fftw_lock.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/oscillatory.hpp"

namespace hypspec {

namespace {

using std::numbers::pi;

double smooth_cutoff(double s) {
  const double a = std::abs(s);
  if (a >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - a * a));
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ContractError("multiplier parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

// RAII wrapper for a real-to-real FFTW transform.
class R2RTransform {
 public:
  R2RTransform(std::size_t n, fftw_r2r_kind kind) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_real(n);
    std::lock_guard lock(detail::fftw_planner_mutex());
    plan_ = fftw_plan_r2r_1d(static_cast<int>(n), in_, out_, kind, FFTW_ESTIMATE);
  }
  ~R2RTransform() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  R2RTransform(const R2RTransform&) = delete;
  R2RTransform& operator=(const R2RTransform&) = delete;

  double* in() { return in_; }
  const double* out() const { return out_; }
  void run() { fftw_execute(plan_); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  double* in_ = nullptr;
  double* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("multiplier: alpha must lie in (0, 1]");
}


// ∫_lo^hi of a function sampled at k d: trapezoid between the inner nodes with the
// Euler-Maclaurin end correction, cubic interpolation on the two partial cells.
// Needs samples from floor(lo / d) - 1 to floor(hi / d) + 2.
double integrate_samples(const std::vector<double>& f, double d, double lo, double hi) {
  auto cubic = [&](std::size_t k, double u) {
    const double f0 = f[k - 1], f1 = f[k], f2 = f[k + 1], f3 = f[k + 2];
    return -f0 * u * (u - 1.0) * (u - 2.0) / 6.0 + f1 * (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0 -
           f2 * (u + 1.0) * u * (u - 2.0) / 2.0 + f3 * (u + 1.0) * u * (u - 1.0) / 6.0;
  };
  // ∫ over u in [u0, u1] of cell k, exact for cubics
  auto cell = [&](std::size_t k, double u0, double u1) {
    const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0), g = std::sqrt(0.6);
    return half * d * (5.0 * cubic(k, mid - g * half) + 8.0 * cubic(k, mid) + 5.0 * cubic(k, mid + g * half)) / 9.0;
  };
  const auto ka = static_cast<std::size_t>(lo / d);
  const auto kb = static_cast<std::size_t>(hi / d);
  const double ua = lo / d - static_cast<double>(ka), ub = hi / d - static_cast<double>(kb);
  if (ka == kb) return cell(ka, ua, ub);
  double total = cell(ka, ua, 1.0) + cell(kb, 0.0, ub);
  const std::size_t a = ka + 1, b = kb;
  if (b > a) {
    double trap = 0.5 * (f[a] + f[b]);
    for (std::size_t k = a + 1; k < b; ++k) trap += f[k];
    const double da = (f[a + 1] - f[a - 1]) / (2.0 * d), db = (f[b + 1] - f[b - 1]) / (2.0 * d);
    total += d * trap - d * d / 12.0 * (db - da);
  }
  return total;
}

}  // namespace

Multiplier zero_multiplier() {
  return {"zero", [](double) { return 0.0; }, 1e9, 0.0};
}

Multiplier gaussian_multiplier(double width) {
  if (!(width > 0.0)) throw DomainError("gaussian_multiplier: width must be positive");
  std::ostringstream name;
  name << "gaussian:w=" << width;
  return {name.str(), [width](double s) { return std::exp(-s * s / (2.0 * width * width)); }, 1e9, 0.0};
}

Multiplier polynomial_multiplier(int m) {
  if (m < 1) throw DomainError("polynomial_multiplier: m must be at least 1");
  return {"poly:m=" + std::to_string(m), [m](double s) { return std::pow(1.0 - s * s, m); }, m + 0.5, 0.0};
}

Multiplier plateau_multiplier(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("plateau_multiplier: a must lie in [0, 1)");
  // smooth step 1 -> 0 on [a, 1] from the functions e^{-1/t}
  auto psi = [](double t) { return t <= 0.0 ? 0.0 : std::exp(-1.0 / t); };
  auto f = [a, psi](double s) {
    if (s <= a) return 1.0;
    if (s >= 1.0) return 0.0;
    const double t = (s - a) / (1.0 - a);
    return psi(1.0 - t) / (psi(1.0 - t) + psi(t));
  };
  std::ostringstream name;
  name << "plateau:a=" << a;
  return {name.str(), f, 1e9, 0.0};
}

Multiplier rough_multiplier(double s_prime, int levels, std::uint64_t seed) {
  if (levels < 1 || levels > 20) throw DomainError("rough_multiplier: levels must lie in [1, 20]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> coeff(static_cast<std::size_t>(levels));
  for (int k = 1; k <= levels; ++k) coeff[static_cast<std::size_t>(k - 1)] = std::pow(2.0, -k * s_prime) * normal(rng);
  std::ostringstream name;
  name << "bump:s=" << s_prime << ",levels=" << levels << ",seed=" << seed;
  auto f = [coeff](double s) {
    double series = 1.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) series += coeff[k] * std::cos(std::ldexp(pi, static_cast<int>(k) + 1) * s);
    return smooth_cutoff(s) * series;
  };
  return {name.str(), f, s_prime, std::ldexp(pi, levels)};
}

Multiplier multiplier_from_name(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const auto params = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (kind == "zero") return zero_multiplier();
  if (kind == "gaussian") return gaussian_multiplier(get("w", 0.15));
  if (kind == "poly") return polynomial_multiplier(static_cast<int>(get("m", 3)));
  if (kind == "plateau") return plateau_multiplier(get("a", 0.5));
  if (kind == "bump") {
    return rough_multiplier(get("s", 1.6), static_cast<int>(get("levels", 12)),
                            static_cast<std::uint64_t>(get("seed", 3)));
  }
  throw ContractError("unknown multiplier '" + spec + "' (expected zero, gaussian, poly, plateau or bump)");
}

std::vector<double> sample_multiplier(const Multiplier& F, std::size_t count) {
  if (count < 3) throw ContractError("sample_multiplier: need at least 3 samples");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = F(static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

SobolevReport sobolev_norm(const Multiplier& F, double s, std::size_t count, std::size_t pad) {
  if (count < 3 || pad < 1) throw ContractError("sobolev_norm: bad sampling");
  const auto samples = sample_multiplier(F, count);
  const double h = 1.0 / static_cast<double>(count - 1);
  const std::size_t n = (count - 1) * pad + 1;
  // DCT-I: Y_k = x_0 + (-1)^k x_{n-1} + 2 sum x_m cos(pi m k / (n - 1))
  R2RTransform dct(n, FFTW_REDFT00);
  for (std::size_t m = 0; m < n; ++m) dct.in()[m] = m < count ? samples[m] : 0.0;
  dct.run();
  // F^(xi_k) = ∫_{-1}^{1} F e^{-i xi x} dx = h Y_k on xi_k = pi k / L, L = (n - 1) h
  const double L = static_cast<double>(n - 1) * h;
  const double d_xi = pi / L;
  SobolevReport rep;
  double weighted = 0.0, plain = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    const double xi = d_xi * static_cast<double>(k);
    const double fh = h * dct.out()[k];
    plain += w * fh * fh;
    weighted += w * std::pow(1.0 + xi * xi, s) * fh * fh;
  }
  // (1/2pi) ∫_R = (1/pi) ∫_0^∞
  rep.norm = std::sqrt(weighted * d_xi / pi);
  rep.l2_fourier = plain * d_xi / pi;
  double direct = 0.0;
  for (std::size_t m = 0; m < count; ++m) {
    const double w = (m == 0 || m + 1 == count) ? 0.5 : 1.0;
    direct += w * samples[m] * samples[m];
  }
  rep.l2_samples = 2.0 * h * direct;
  return rep;
}

RadialProfile multiplier_kernel(int n, const Multiplier& F, double alpha, const std::vector<double>& r,
                                const MultiplierKernelOptions& options) {
  check_alpha(alpha);
  if (r.empty()) throw ContractError("multiplier_kernel: empty r grid");
  const double r_max = *std::max_element(r.begin(), r.end());
  // Nyquist: sigma spacing (alpha-scaled) times r_max below pi/4
  const auto required = static_cast<std::size_t>(std::ceil(4.0 * r_max / (pi * alpha))) + 2;
  std::size_t count = options.samples;
  if (count == 0) count = std::max<std::size_t>(16385, 2 * required + 1);
  if (count < required) {
    throw ResolutionError("multiplier_kernel: too few samples of F for r_max", required);
  }
  const auto& sym = kernel_symbol(n, 1);
  const int k = n / 2;
  const auto samples = sample_multiplier(F, count);
  const auto s_grid = linspace(0.0, 1.0, count);

  // C^{(j)}(r) = Re[i^j alpha^{-j-1} ∫_0^1 s^j F(s) e^{i s r / alpha} ds]
  std::vector<double> omega(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) omega[i] = r[i] / alpha;
  std::vector<std::vector<double>> derivs(r.size(), std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0));
  for (int j = 1; j <= k; ++j) {
    std::vector<double> g(count);
    for (std::size_t m = 0; m < count; ++m) g[m] = std::pow(s_grid[m], j) * samples[m];
    const SplineFilon spline(s_grid, std::move(g));
    const auto f = spline.fourier_many(omega);
    const std::complex<double> ij = std::pow(std::complex<double>(0.0, 1.0), j);
    for (std::size_t i = 0; i < r.size(); ++i) {
      derivs[i][static_cast<std::size_t>(j)] = (ij * f[i]).real() / std::pow(alpha, j + 1);
    }
  }
  RadialProfile out;
  out.r = r;
  out.n = n;
  out.values.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.values[i] = sym.evaluate_on(r[i], derivs[i]) / pi;
  return out;
}

double multiplier_kernel_spectral(int n, const Multiplier& F, double alpha, double r, double tol) {
  check_alpha(alpha);
  // substitute sigma = s / alpha so the integral runs over the support [0, 1];
  // each piece spans about one period of the fastest oscillation
  auto f = [&](double s) { return s <= 0.0 ? 0.0 : F(s) * spectral_measure(n, s / alpha, r) / alpha; };
  const double freq = F.max_frequency + r / alpha;
  const int pieces = std::max(8, static_cast<int>(std::ceil(freq / (2.0 * pi))));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = static_cast<double>(i) / pieces;
    const double b = static_cast<double>(i + 1) / pieces;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 6, tol);
  }
  return total;
}

FarDiagonalTable far_diagonal_table(const Multiplier& F, double omega_max, std::size_t pad) {
  if (!(omega_max > 0.0) || pad < 2) throw ContractError("far_diagonal_table: bad parameters");
  // need pi / h >= 2 omega_max on [0, 1]; round the sample count up to a power of two
  std::size_t per_unit = 1024;
  while (pi * static_cast<double>(per_unit) < 2.0 * omega_max) per_unit *= 2;
  const std::size_t total = per_unit * pad;  // intervals on [0, L], L = pad
  const double h = 1.0 / static_cast<double>(per_unit);
  // RODFT00 on interior points m = 1..total-1: Y_k = 2 sum x_m sin(pi m k / total)
  R2RTransform dst(total - 1, FFTW_RODFT00);
  for (std::size_t m = 1; m < total; ++m) {
    const double s = h * static_cast<double>(m);
    dst.in()[m - 1] = s < 1.0 ? s * F(s) : 0.0;
  }
  dst.run();
  FarDiagonalTable table;
  table.d_omega = pi / static_cast<double>(pad);
  const auto keep = std::min(total - 1, static_cast<std::size_t>(std::ceil(omega_max / table.d_omega)) + 2);
  table.S.resize(keep + 1);
  table.S[0] = 0.0;
  for (std::size_t k = 1; k <= keep; ++k) table.S[k] = 0.5 * h * dst.out()[k - 1];
  return table;
}

double far_diagonal_norm(const FarDiagonalTable& table, double alpha, double r_max) {
  check_alpha(alpha);
  const double lo = 1.0 / alpha;
  const double hi = r_max / alpha;
  if (static_cast<std::size_t>(hi / table.d_omega) + 3 > table.S.size() || lo / table.d_omega < 1.0) {
    throw ResolutionError("far_diagonal_norm: table does not reach r_max / alpha",
                          static_cast<std::size_t>(hi / table.d_omega) + 2);
  }
  std::vector<double> sq(table.S.size());
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = table.S[k] * table.S[k];
  const double integral = integrate_samples(sq, table.d_omega, lo, hi);
  return std::sqrt(integral / (4.0 * std::pow(pi, 4) * std::pow(alpha, 3)));
}

double far_diagonal_norm(const Multiplier& F, double alpha, double r_max) {
  return far_diagonal_norm(far_diagonal_table(F, r_max / alpha), alpha, r_max);
}

}  // namespace hypspec
