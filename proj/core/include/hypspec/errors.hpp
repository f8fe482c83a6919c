#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypspec {

// Argument outside the mathematical domain of an operation (x <= 0, r <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller violated a documented precondition that is not a domain issue
// (mismatched grids, too few points, missing derivative orders).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedOrderError : public ContractError {
 public:
  using ContractError::ContractError;
};

// The ODE integrator could not continue. Carries the last accepted state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t, std::vector<double> state)
      : std::runtime_error(what), last_time_(t), last_state_(std::move(state)) {}

  double last_time() const noexcept { return last_time_; }
  const std::vector<double>& last_state() const noexcept { return last_state_; }

 private:
  double last_time_;
  std::vector<double> last_state_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

// Sampling too coarse for the requested output range.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, std::size_t required_samples)
      : std::runtime_error(what), required_samples_(required_samples) {}
  std::size_t required_samples() const noexcept { return required_samples_; }

 private:
  std::size_t required_samples_;
};

// Integrand has not decayed at the end of a truncated grid.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double tail_estimate)
      : std::runtime_error(what), tail_estimate_(tail_estimate) {}
  double tail_estimate() const noexcept { return tail_estimate_; }

 private:
  double tail_estimate_;
};

}  // namespace hypspec
