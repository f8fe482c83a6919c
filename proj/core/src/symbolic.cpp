#include "hypspec/symbolic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational binomial(int n, int k) {
  Rational b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

void UVPolynomial::add_term(int u_power, int v_power, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(u_power, v_power);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

void UVPolynomial::refresh_numeric() {
  a_numeric_.clear();
  b_numeric_.clear();
  for (const auto& [key, c] : coeffs_) {
    auto& target = key.first == 0 ? a_numeric_ : b_numeric_;
    const auto idx = static_cast<std::size_t>(key.second);
    if (target.size() <= idx) target.resize(idx + 1, 0.0);
    target[idx] = to_double(c);
  }
}

UVPolynomial UVPolynomial::constant(const Rational& c) { return monomial(c, 0, 0); }

UVPolynomial UVPolynomial::monomial(const Rational& c, int u_power, int v_power) {
  if (u_power < 0 || v_power < 0) throw ContractError("UVPolynomial: negative exponent");
  UVPolynomial p;
  // u^a = u^{a mod 2} (1 + v^2)^{a / 2}
  const int half = u_power / 2;
  for (int i = 0; i <= half; ++i) p.add_term(u_power % 2, v_power + 2 * i, c * binomial(half, i));
  p.refresh_numeric();
  return p;
}

UVPolynomial& UVPolynomial::operator+=(const UVPolynomial& other) {
  for (const auto& [key, c] : other.coeffs_) add_term(key.first, key.second, c);
  refresh_numeric();
  return *this;
}

UVPolynomial UVPolynomial::operator+(const UVPolynomial& other) const {
  UVPolynomial out = *this;
  out += other;
  return out;
}

UVPolynomial UVPolynomial::operator*(const UVPolynomial& other) const {
  UVPolynomial out;
  for (const auto& [ka, ca] : coeffs_) {
    for (const auto& [kb, cb] : other.coeffs_) {
      out += monomial(ca * cb, ka.first + kb.first, ka.second + kb.second);
    }
  }
  return out;
}

UVPolynomial UVPolynomial::scaled(const Rational& c) const {
  UVPolynomial out;
  if (c == 0) return out;
  for (const auto& [key, coeff] : coeffs_) out.coeffs_.emplace(key, coeff * c);
  out.refresh_numeric();
  return out;
}

UVPolynomial UVPolynomial::derivative_r() const {
  UVPolynomial out;
  for (const auto& [key, c] : coeffs_) {
    const int b = key.second;
    if (key.first == 0) {
      // d(v^b) = -b u v^b
      out.add_term(1, b, -c * b);
    } else {
      // d(u v^b) = -(b + 1) v^{b+2} - b v^b
      out.add_term(0, b + 2, -c * (b + 1));
      out.add_term(0, b, -c * b);
    }
  }
  out.refresh_numeric();
  return out;
}

double UVPolynomial::evaluate(double u, double v) const {
  auto horner = [v](const std::vector<double>& c) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
  };
  return horner(a_numeric_) + u * horner(b_numeric_);
}

Rational UVPolynomial::coefficient(int u_power, int v_power) const {
  auto it = coeffs_.find({u_power, v_power});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::string UVPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (key.first) os << "*u";
    if (key.second == 1) os << "*v";
    if (key.second > 1) os << "*v^" << key.second;
  }
  return os.str();
}

SymbolicRadialKernel SymbolicRadialKernel::plane_wave(int phase) {
  if (phase != 1 && phase != -1) throw ContractError("plane_wave: phase must be +1 or -1");
  SymbolicRadialKernel k;
  k.phase_ = phase;
  k.terms_.push_back({UVPolynomial::constant(1), 0});
  return k;
}

double SymbolicRadialKernel::prefactor_value() const {
  return to_double(prefactor_) * std::pow(std::numbers::pi, pi_power_);
}

std::pair<double, double> coth_csch(double r) {
  // with e = expm1(2r): sinh r = e / (2 e^r), coth r = (e + 2) / e
  const double e2 = std::expm1(2.0 * r);
  const double u = (e2 + 2.0) / e2;
  const double v = 2.0 * std::exp(r) / e2;
  return {u, v};
}

std::complex<double> SymbolicRadialKernel::evaluate(std::complex<double> sigma, double r) const {
  if (!(r > 0.0)) throw DomainError("symbolic kernel: r must be positive");
  const auto [u, v] = coth_csch(r);
  const std::complex<double> is = std::complex<double>(0.0, 1.0) * sigma;
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) sum += t.poly.evaluate(u, v) * std::pow(is, t.j);
  const std::complex<double> wave = std::exp(static_cast<double>(phase_) * is * r);
  return prefactor_value() * wave * sum;
}

double SymbolicRadialKernel::evaluate_on(double r, std::span<const double> derivs) const {
  if (!(r > 0.0)) throw DomainError("symbolic kernel: r must be positive");
  if (phase_ != 1) throw ContractError("evaluate_on needs a kernel built from plane_wave(+1)");
  const auto [u, v] = coth_csch(r);
  double sum = 0.0;
  for (const auto& t : terms_) {
    if (static_cast<std::size_t>(t.j) >= derivs.size()) {
      throw ContractError("evaluate_on: not enough derivatives supplied");
    }
    sum += t.poly.evaluate(u, v) * derivs[static_cast<std::size_t>(t.j)];
  }
  return prefactor_value() * sum;
}

std::string SymbolicRadialKernel::to_string() const {
  std::ostringstream os;
  os << "(" << prefactor_ << ")*pi^" << pi_power_ << " * exp(" << (phase_ > 0 ? "+" : "-") << "i*s*r) * [";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "{" << terms_[i].poly.to_string() << "}*(i*s)^" << terms_[i].j;
  }
  os << "]";
  return os.str();
}

SymbolicRadialKernel apply_D(const SymbolicRadialKernel& kernel) {
  std::map<int, UVPolynomial> collected;
  const UVPolynomial v = UVPolynomial::monomial(1, 0, 1);
  for (const auto& t : kernel.terms_) {
    collected[t.j] += t.poly.derivative_r() * v;
    collected[t.j + 1] += t.poly.scaled(kernel.phase_) * v;
  }
  SymbolicRadialKernel out;
  out.phase_ = kernel.phase_;
  out.order_ = kernel.order_ + 1;
  out.prefactor_ = kernel.prefactor_ * Rational(-1, 2);
  out.pi_power_ = kernel.pi_power_ - 1;
  for (auto& [j, poly] : collected) {
    if (!poly.is_zero()) out.terms_.push_back({std::move(poly), j});
  }
  return out;
}

SymbolicRadialKernel apply_D_power(const SymbolicRadialKernel& kernel, int k) {
  if (k < 0) throw ContractError("apply_D_power: k must be nonnegative");
  SymbolicRadialKernel out = kernel;
  for (int i = 0; i < k; ++i) out = apply_D(out);
  return out;
}

}  // namespace hypspec
