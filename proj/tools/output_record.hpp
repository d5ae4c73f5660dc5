#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace spectra::cli {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// Result table of one CLI invocation. Every row carries a provenance string
/// naming the result it reports.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> provenance;

  void add_row(std::vector<Cell> cells, std::string source);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::ordered_json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// CSV with a header line: the record's columns followed by `provenance`.
void write_csv(std::ostream& out, const OutputRecord& record);
void write_json(std::ostream& out, const OutputRecord& record);

/// Fixed-precision text for a number (%.15g; inf and nan spelled out).
std::string format_number(double v);

}  // namespace spectra::cli
