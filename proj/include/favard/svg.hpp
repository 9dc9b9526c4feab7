#pragma once

#include <string>
#include <utility>
#include <vector>

namespace favard {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y), both positive
    std::string color = "#1f6fb2";
    bool dashed = false;
};

// Self-contained log-log polyline plot (no external assets).  Series with
// nonpositive coordinates are clipped point-wise.
void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series);

}  // namespace favard
