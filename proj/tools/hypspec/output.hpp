#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hypspec::cli {

using Json = nlohmann::ordered_json;

// Anything that prevents writing an output file.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

struct Series {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
};

// Everything a subcommand produces.
struct CommandOutput {
  Json results = Json::object();
  std::optional<CsvTable> csv;
  std::optional<Plot> plot;
  bool passed = true;
  std::string summary;
};

struct RunInfo {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  bool timestamp = false;
};

std::string render_json(const RunInfo& info, const CommandOutput& out);
std::string render_csv(const RunInfo& info, const CsvTable& table);
std::string render_svg(const RunInfo& info, const Plot& plot);

void write_file(const std::string& path, const std::string& content);

}  // namespace hypspec::cli
