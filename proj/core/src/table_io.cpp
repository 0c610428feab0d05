#include "irsnoma/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "irsnoma/version.hpp"

namespace irsnoma {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << "# irsnoma sweep table\n";
  out << "# version: " << kVersion << "\n";
  out << "# config: " << table.metadata << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_g17(row[i]);
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const SweepTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(out, table);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

ParsedCsv read_csv(std::istream& in) {
  ParsedCsv csv;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::size_t start = 1;
      while (start < line.size() && line[start] == ' ') ++start;
      csv.comments.push_back(line.substr(start));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      csv.columns = cells;
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

ParsedCsv read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(in);
}

std::string metadata_json(const ParsedCsv& csv) {
  constexpr const char* kPrefix = "config: ";
  for (const auto& c : csv.comments) {
    if (c.rfind(kPrefix, 0) == 0) return c.substr(std::string(kPrefix).size());
  }
  throw std::runtime_error("no 'config:' metadata comment in table");
}

}  // namespace irsnoma
