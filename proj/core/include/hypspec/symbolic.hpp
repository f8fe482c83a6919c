#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypspec {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial in u = coth r and v = csch r with exact rational coefficients,
// kept in the canonical form A(v) + u B(v) (u^2 is rewritten as 1 + v^2).
class UVPolynomial {
 public:
  UVPolynomial() = default;
  static UVPolynomial constant(const Rational& c);
  // c u^a v^b for any a >= 0; reduced on construction.
  static UVPolynomial monomial(const Rational& c, int u_power, int v_power);

  UVPolynomial& operator+=(const UVPolynomial& other);
  UVPolynomial operator+(const UVPolynomial& other) const;
  UVPolynomial operator*(const UVPolynomial& other) const;
  UVPolynomial scaled(const Rational& c) const;

  // d/dr using du/dr = -v^2, dv/dr = -u v.
  UVPolynomial derivative_r() const;

  double evaluate(double u, double v) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t term_count() const noexcept { return coeffs_.size(); }
  // Coefficient of u^a v^b in canonical form (a in {0, 1}).
  Rational coefficient(int u_power, int v_power) const;
  std::string to_string() const;

  bool operator==(const UVPolynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  void add_term(int u_power, int v_power, const Rational& c);
  void refresh_numeric();
  // key: (u power in {0, 1}, v power)
  std::map<std::pair<int, int>, Rational> coeffs_;
  // double copies of A(v) and B(v) coefficients, index = v power
  std::vector<double> a_numeric_, b_numeric_;
};

struct SymbolicTerm {
  UVPolynomial poly;
  int j = 0;  // power of (i sigma)
};

// prefactor * pi^pi_power * e^{phase i sigma r} * sum_j poly_j(coth r, csch r) (i sigma)^j
class SymbolicRadialKernel {
 public:
  SymbolicRadialKernel() = default;
  // e^{phase i sigma r} itself: a single term (1, j = 0).
  static SymbolicRadialKernel plane_wave(int phase);

  int phase() const noexcept { return phase_; }
  const Rational& prefactor() const noexcept { return prefactor_; }
  int pi_power() const noexcept { return pi_power_; }
  const std::vector<SymbolicTerm>& terms() const noexcept { return terms_; }
  // Number of D applications made so far (n = 2k for the kernel family).
  int order() const noexcept { return order_; }
  double prefactor_value() const;

  std::complex<double> evaluate(std::complex<double> sigma, double r) const;
  // Same kernel with e^{phase i sigma r} (i sigma)^j replaced by g^{(j)}(r),
  // valid when the kernel was built from plane_wave(+1). derivs[j] = g^{(j)}(r).
  double evaluate_on(double r, std::span<const double> derivs) const;

  std::string to_string() const;

 private:
  friend SymbolicRadialKernel apply_D(const SymbolicRadialKernel&);
  int phase_ = 1;
  int order_ = 0;
  Rational prefactor_ = 1;
  int pi_power_ = 0;
  std::vector<SymbolicTerm> terms_;  // sorted by j, nonzero polys only
};

// D = -(1/2pi) (1/sinh r) d/dr.
SymbolicRadialKernel apply_D(const SymbolicRadialKernel& kernel);
SymbolicRadialKernel apply_D_power(const SymbolicRadialKernel& kernel, int k);

// coth r and csch r without cancellation near r = 0.
std::pair<double, double> coth_csch(double r);

}  // namespace hypspec
