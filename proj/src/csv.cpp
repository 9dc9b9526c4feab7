#include "favard/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "favard/interval_union.hpp"

namespace favard {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::invalid_argument("CSV column not found: " + name);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open CSV file: " + path);

    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(ss, cell, ',')) table.header.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("non-numeric CSV cell '" + cell + "' in " + path);
            }
        }
        if (row.size() != table.header.size()) {
            throw std::invalid_argument("ragged CSV row in " + path);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument("CSV file has no header: " + path);
    return table;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write CSV file: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << format_g17(row[i]) << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

void write_interval_csv(const std::string& path, const IntervalUnion& u) {
    std::vector<std::vector<double>> rows;
    rows.reserve(u.size());
    for (const Interval& iv : u.intervals()) rows.push_back({iv.lo, iv.hi});
    write_csv(path, {"lo", "hi"}, rows);
}

}  // namespace favard
