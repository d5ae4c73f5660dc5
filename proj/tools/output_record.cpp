#include "output_record.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spectra::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
        else return std::to_string(v);
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (std::isnan(v)) return "nan";
          if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
        }
        return v;
      },
      c);
}

Cell cell_from_json(const nlohmann::ordered_json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    return s;
  }
  throw std::invalid_argument("unsupported JSON cell");
}

}  // namespace

void OutputRecord::add_row(std::vector<Cell> cells, std::string source) {
  if (cells.size() != columns.size()) throw std::logic_error("row width does not match the columns");
  rows.push_back(std::move(cells));
  provenance.push_back(std::move(source));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.inputs) j["inputs"][k] = v;
  j["columns"] = record.columns;
  j["results"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    nlohmann::ordered_json row;
    for (std::size_t c = 0; c < record.columns.size(); ++c) row[record.columns[c]] = cell_json(record.rows[r][c]);
    row["provenance"] = record.provenance[r];
    j["results"].push_back(std::move(row));
  }
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs[k] = v.get<std::string>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("results")) {
    std::vector<Cell> cells;
    for (const auto& col : r.columns) cells.push_back(cell_from_json(row.at(col)));
    r.rows.push_back(std::move(cells));
    r.provenance.push_back(row.at("provenance").get<std::string>());
  }
  return r;
}

void write_csv(std::ostream& out, const OutputRecord& record) {
  for (const auto& c : record.columns) out << c << ',';
  out << "provenance\n";
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    for (const auto& cell : record.rows[r]) out << cell_text(cell) << ',';
    out << csv_escape(record.provenance[r]) << '\n';
  }
}

void write_json(std::ostream& out, const OutputRecord& record) { out << to_json(record).dump(2) << '\n'; }

}  // namespace spectra::cli
