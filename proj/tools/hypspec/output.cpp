#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#ifndef HYPSPEC_VERSION
#define HYPSPEC_VERSION "unknown"
#endif

namespace hypspec::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_json(const RunInfo& info, const CommandOutput& out) {
  Json doc;
  doc["schema"] = 1;
  doc["tool"] = "hypspec";
  doc["version"] = HYPSPEC_VERSION;
  doc["command"] = info.command;
  doc["seed"] = info.seed;
  doc["config"] = info.config;
  if (info.timestamp) doc["timestamp"] = utc_now();
  doc["passed"] = out.passed;
  doc["results"] = out.results;
  return doc.dump(2) + "\n";
}

std::string render_csv(const RunInfo& info, const CsvTable& table) {
  std::ostringstream os;
  os << "# hypspec " << HYPSPEC_VERSION << " " << info.command << " seed=" << info.seed << "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_svg(const RunInfo& info, const Plot& plot) {
  constexpr double width = 640, height = 420, margin = 60;
  auto tx = [&](double v) { return plot.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return plot.log_y ? std::log10(v) : v; };

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      const double x = tx(s.xs[i]), y = ty(s.ys[i]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;

  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<!-- hypspec " << HYPSPEC_VERSION << " " << xml_escape(info.command) << " seed=" << info.seed << " -->\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(plot.title)
     << "</text>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
     << xml_escape(plot.x_label) << (plot.log_x ? " (log10)" : "") << "</text>\n";
  os << "<text x=\"14\" y=\"" << height / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 " << height / 2
     << ")\" text-anchor=\"middle\">" << xml_escape(plot.y_label) << (plot.log_y ? " (log10)" : "") << "</text>\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin / 2 << "\" width=\"" << width - 1.5 * margin << "\" height=\""
     << height - 1.5 * margin - margin / 2 << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double pw = width - 1.5 * margin, ph = height - 2.0 * margin;
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    os << "<polyline fill=\"none\" stroke=\"" << colours[k % 6] << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      const double x = tx(s.xs[i]), y = ty(s.ys[i]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      const double px = margin + (x - x0) / (x1 - x0) * pw;
      const double py = margin / 2 + ph - (y - y0) / (y1 - y0) * ph;
      os << (first ? "" : " ") << format_number(std::round(px * 100) / 100) << ","
         << format_number(std::round(py * 100) / 100);
      first = false;
    }
    os << "\"><title>" << xml_escape(s.name) << "</title></polyline>\n";
    os << "<text x=\"" << margin + 10 << "\" y=\"" << margin / 2 + 18 + 16 * k << "\" font-size=\"12\" fill=\""
       << colours[k % 6] << "\">" << xml_escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace hypspec::cli
