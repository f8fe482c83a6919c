#include "hypspec/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s) {
  s = trim(s);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ContractError("not a number: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) {
    throw ContractError("grid must look like lo:hi:{lin,log}:count, got '" + std::string(text) + "'");
  }
  GridSpec g;
  g.lo = to_double(parts[0]);
  g.hi = to_double(parts[1]);
  const auto kind = trim(parts[2]);
  if (kind == "lin") {
    g.spacing = Spacing::linear;
  } else if (kind == "log") {
    g.spacing = Spacing::logarithmic;
  } else {
    throw ContractError("grid spacing must be lin or log, got '" + std::string(kind) + "'");
  }
  const double count = to_double(parts[3]);
  if (count < 1 || count != std::floor(count)) {
    throw ContractError("grid count must be a positive integer");
  }
  g.count = static_cast<std::size_t>(count);
  if (g.hi < g.lo) throw ContractError("grid upper bound below lower bound");
  if (g.spacing == Spacing::logarithmic && g.lo <= 0.0) {
    throw ContractError("log grid needs a positive lower bound");
  }
  if (g.count == 1 && g.lo != g.hi) {
    throw ContractError("single-point grid needs lo == hi");
  }
  return g;
}

std::string GridSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << lo << ':' << hi << ':' << (spacing == Spacing::linear ? "lin" : "log") << ':' << count;
  return os.str();
}

std::vector<double> GridSpec::points() const {
  return spacing == Spacing::linear ? linspace(lo, hi, count) : logspace(lo, hi, count);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
  if (lo <= 0.0 || hi <= 0.0) throw ContractError("logspace needs positive bounds");
  auto out = linspace(std::log(lo), std::log(hi), count);
  for (auto& v : out) v = std::exp(v);
  if (!out.empty()) {
    out.front() = lo;
    out.back() = hi;
  }
  return out;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) {
    if (trim(part).empty()) continue;
    out.push_back(to_double(part));
  }
  return out;
}

}  // namespace hypspec
