#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hypspec {

enum class Spacing { linear, logarithmic };

// Grid specification written as "lo:hi:lin:count" or "lo:hi:log:count".
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  Spacing spacing = Spacing::linear;
  std::size_t count = 2;

  static GridSpec parse(std::string_view text);
  std::string to_string() const;
  std::vector<double> points() const;
};

std::vector<double> linspace(double lo, double hi, std::size_t count);
std::vector<double> logspace(double lo, double hi, std::size_t count);

// Parses "a,b,c" into doubles. Whitespace around entries is ignored.
std::vector<double> parse_list(std::string_view text);

}  // namespace hypspec
