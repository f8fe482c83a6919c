#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypspec {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  // Named measurements in the order they were taken.
  std::vector<std::pair<std::string, double>> metrics;
  std::string detail;
};

constexpr int kCriterionCount = 15;

std::string criterion_name(int id);
double criterion_budget(int id);

// Runs criterion id (1..15). Checks never throw: a numerical failure inside a
// criterion is caught and reported as a failed result with the message in detail.
// Passing also requires finishing within the time budget.
CriterionResult run_criterion(int id);

}  // namespace hypspec
