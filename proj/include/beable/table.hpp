#pragma once

// Plot-ready result tables: ordered columns with units, numeric rows, and
// reproducibility metadata, serialized as CSV or JSON with full double
// precision so emitted values survive a round trip bit-exactly.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "beable/defs.hpp"

namespace beable {

struct ResultTable {
  std::vector<std::pair<std::string, std::string>> columns;  // (name, unit)
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // insertion order
};

inline void add_row(ResultTable& table, std::initializer_list<double> values) {
  require(values.size() == table.columns.size(),
          "add_row: row width does not match the column count");
  table.rows.emplace_back(values);
}

namespace detail {

inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

}  // namespace detail

inline void emit_csv(const ResultTable& table, std::ostream& os) {
  for (const auto& [key, value] : table.metadata)
    os << "# " << key << "=" << value << "\n";
  for (size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c].first << "(" << table.columns[c].second
       << ")";
  os << "\n";
  for (const std::vector<double>& row : table.rows) {
    require(row.size() == table.columns.size(),
            "emit_csv: row width does not match the column count");
    for (size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << detail::format_full(row[c]);
    os << "\n";
  }
}

inline void emit_json(const ResultTable& table, std::ostream& os) {
  nlohmann::ordered_json j;
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& [name, unit] : table.columns)
    j["columns"].push_back({{"name", name}, {"unit", unit}});
  j["rows"] = nlohmann::ordered_json::array();
  for (const std::vector<double>& row : table.rows) {
    require(row.size() == table.columns.size(),
            "emit_json: row width does not match the column count");
    // numbers serialize with shortest round-trip precision
    j["rows"].push_back(row);
  }
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) j["metadata"][key] = value;
  os << j.dump(2) << "\n";
}

inline void write_table(const ResultTable& table, const std::string& path,
                        const std::string& format) {
  require(format == "csv" || format == "json",
          "write_table: format must be csv or json");
  std::ofstream os(path, std::ios::binary);  // binary keeps LF endings
  if (!os) throw numeric_error("write_table: cannot open '" + path + "' for writing");
  if (format == "csv")
    emit_csv(table, os);
  else
    emit_json(table, os);
  os.flush();
  if (!os) throw numeric_error("write_table: write to '" + path + "' failed");
}

// parse back an emitted CSV; used by the round-trip checks
inline ResultTable parse_csv(std::istream& is) {
  ResultTable table;
  std::string line;
  bool header_done = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const size_t eq = line.find('=');
      require(eq != std::string::npos, "parse_csv: malformed metadata line");
      table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    std::stringstream cells(line);
    std::string cell;
    if (!header_done) {
      while (std::getline(cells, cell, ',')) {
        const size_t open = cell.rfind('(');
        require(open != std::string::npos && cell.back() == ')',
                "parse_csv: column header lacks a unit");
        table.columns.emplace_back(cell.substr(0, open),
                                   cell.substr(open + 1, cell.size() - open - 2));
      }
      header_done = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    require(row.size() == table.columns.size(), "parse_csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace beable
