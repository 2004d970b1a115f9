#ifndef TOOLS_SVG_PLOT_HPP
#define TOOLS_SVG_PLOT_HPP

#include <string>
#include <utility>
#include <vector>

namespace svgplot {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool x_log = false;
    bool y_log = false;
    std::vector<Series> series;
};

/// Writes a static SVG line plot. Points with nonpositive coordinates on a
/// log-scaled axis split the polyline instead of being drawn.
void write_line_plot(const std::string& path, const PlotSpec& spec);

}  // namespace svgplot

#endif  // TOOLS_SVG_PLOT_HPP
