#pragma once

#include <string>
#include <vector>

namespace favard {

// Shortest-round-trip decimal at 17 significant digits; every CSV number in
// this project goes through here so outputs are diffable.
std::string format_g17(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    // Column index by name; throws std::invalid_argument when absent.
    std::size_t column(const std::string& name) const;
};

// Reads a numeric CSV with a mandatory header row.  '#' lines are skipped.
CsvTable read_csv(const std::string& path);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

class IntervalUnion;

// One interval per row, columns lo,hi.
void write_interval_csv(const std::string& path, const IntervalUnion& u);

}  // namespace favard
