// Runs the acceptance criteria and prints one line per criterion.
// Usage: hypspec_acceptance [id ...]   (no ids: all of them)
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hypspec/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= hypspec::kCriterionCount; ++id) ids.push_back(id);
  }
  int failed = 0;
  for (int id : ids) {
    if (id < 1 || id > hypspec::kCriterionCount) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto r = hypspec::run_criterion(id);
    std::printf("%s %2d %-36s %7.2fs / %4.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
