#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "irsnoma/sweep.hpp"

namespace irsnoma {

/// %.17g formatting: shortest round-trippable representation at 17 significant
/// digits; values parse back bit-exactly.
std::string format_g17(double v);

/// CSV layout: '#'-prefixed metadata comment lines (version + full spec JSON),
/// then the header row, then one data row per grid point.
void write_csv(std::ostream& out, const SweepTable& table);
void write_csv_file(const std::string& path, const SweepTable& table);

struct ParsedCsv {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

ParsedCsv read_csv(std::istream& in);
ParsedCsv read_csv_file(const std::string& path);

/// Extracts the metadata JSON from a parsed table's comment block (the
/// "config:" line). Throws std::runtime_error when absent.
std::string metadata_json(const ParsedCsv& csv);

}  // namespace irsnoma
