#include "favard/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "favard/csv.hpp"

namespace favard {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 160.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

}  // namespace

void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series) {
    double lx_min = std::numeric_limits<double>::infinity();
    double lx_max = -lx_min, ly_min = lx_min, ly_max = lx_max;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (x <= 0.0 || y <= 0.0) continue;
            lx_min = std::min(lx_min, std::log10(x));
            lx_max = std::max(lx_max, std::log10(x));
            ly_min = std::min(ly_min, std::log10(y));
            ly_max = std::max(ly_max, std::log10(y));
        }
    }
    if (!(lx_min <= lx_max)) throw std::invalid_argument("write_loglog_svg: no positive data");
    if (lx_max - lx_min < 1e-9) lx_max = lx_min + 1.0;
    if (ly_max - ly_min < 1e-9) ly_max = ly_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double lx) { return kMarginLeft + (lx - lx_min) / (lx_max - lx_min) * plot_w; };
    auto sy = [&](double ly) { return kMarginTop + (ly_max - ly) / (ly_max - ly_min) * plot_h; };

    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write SVG file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // Decade ticks.
    for (int d = static_cast<int>(std::ceil(lx_min)); d <= static_cast<int>(std::floor(lx_max));
         ++d) {
        const double x = sx(d);
        out << "<line x1=\"" << x << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << x
            << "\" y2=\"" << kMarginTop << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ly_min)); d <= static_cast<int>(std::floor(ly_max));
         ++d) {
        const double y = sy(d);
        out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
            << kMarginLeft + plot_w << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
            << "</text>\n";
    }

    double legend_y = kMarginTop + 12.0;
    for (const PlotSeries& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (s.dashed) out << " stroke-dasharray=\"6,4\"";
        out << " points=\"";
        for (const auto& [x, y] : s.points) {
            if (x <= 0.0 || y <= 0.0) continue;
            out << format_g17(sx(std::log10(x))) << "," << format_g17(sy(std::log10(y))) << " ";
        }
        out << "\"/>\n";
        const double lx = kMarginLeft + plot_w + 12.0;
        out << "<line x1=\"" << lx << "\" y1=\"" << legend_y << "\" x2=\"" << lx + 22
            << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (s.dashed) out << " stroke-dasharray=\"6,4\"";
        out << "/>\n";
        out << "<text x=\"" << lx + 28 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
        legend_y += 18.0;
    }
    out << "</svg>\n";
}

}  // namespace favard
