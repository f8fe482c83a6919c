#include "hypspec/metric_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hypspec/errors.hpp"
#include "hypspec/grid.hpp"

namespace hypspec {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double number(const std::string& key, const std::string& value) {
  const auto v = parse_list(value);
  if (v.size() != 1) throw ContractError("config key " + key + " expects one number");
  return v.front();
}

// shortest text that reads back to the same doubles
std::string join(const std::vector<double>& v) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out.append(buf, std::to_chars(buf, buf + sizeof buf, v[i]).ptr);
  }
  return out;
}

}  // namespace

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::hyperbolic: return "hyperbolic";
    case MetricKind::perturbed: return "perturbed";
    case MetricKind::warped: return "warped";
  }
  return "unknown";
}

MetricConfig MetricConfig::from_pairs(const std::map<std::string, std::string>& kv) {
  MetricConfig c;
  for (const auto& [key, value] : kv) {
    if (key == "metric.kind") {
      if (value == "hyperbolic") c.kind = MetricKind::hyperbolic;
      else if (value == "perturbed") c.kind = MetricKind::perturbed;
      else if (value == "warped") c.kind = MetricKind::warped;
      else throw ContractError("unknown metric.kind '" + value + "'");
    } else if (key == "metric.n") {
      const double n = number(key, value);
      if (n < 1 || n != static_cast<int>(n)) throw ContractError("metric.n must be a positive integer");
      c.n = static_cast<int>(n);
    } else if (key == "metric.bump.amplitude") {
      c.bump.amplitude = number(key, value);
    } else if (key == "metric.bump.center") {
      c.bump.center = parse_list(value);
    } else if (key == "metric.bump.radius") {
      c.bump.radius = number(key, value);
    } else if (key == "metric.warp") {
      if (value != "sinh" && value != "sinh_plus_gaussian") {
        throw ContractError("unknown metric.warp '" + value + "'");
      }
      c.warp = value;
    } else if (key == "flow.epsilon") {
      c.epsilon = number(key, value);
      if (!(c.epsilon > 0.0)) throw ContractError("flow.epsilon must be positive");
    } else {
      throw ContractError("unknown config key '" + key + "'");
    }
  }
  return c;
}

MetricConfig MetricConfig::parse(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ContractError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return from_pairs(kv);
}

MetricConfig MetricConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open metric config '" + path + "'");
  return parse(in);
}

std::map<std::string, std::string> MetricConfig::echo() const {
  std::map<std::string, std::string> out;
  out["metric.kind"] = to_string(kind);
  out["metric.n"] = std::to_string(n);
  if (kind == MetricKind::perturbed) {
    out["metric.bump.amplitude"] = join({bump.amplitude});
    out["metric.bump.center"] = join(bump.center);
    out["metric.bump.radius"] = join({bump.radius});
  }
  if (kind == MetricKind::warped) out["metric.warp"] = warp;
  out["flow.epsilon"] = join({epsilon});
  return out;
}

HalfSpaceMetric make_halfspace_metric(const MetricConfig& config) {
  switch (config.kind) {
    case MetricKind::hyperbolic: return exact_hyperbolic(config.n);
    case MetricKind::perturbed: return conformal_bump(config.n, config.bump);
    case MetricKind::warped: break;
  }
  throw ContractError("warped metrics have no half-space chart; use make_warped_metric");
}

WarpedMetric make_warped_metric(const MetricConfig& config) {
  if (config.kind != MetricKind::warped) throw ContractError("config does not describe a warped metric");
  return config.warp == "sinh" ? warp_sinh(config.n) : warp_sinh_plus_gaussian(config.n);
}

}  // namespace hypspec
