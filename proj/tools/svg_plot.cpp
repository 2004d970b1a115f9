#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace svgplot {
namespace {

constexpr int kWidth = 760, kHeight = 500;
constexpr int kLeft = 90, kRight = 30, kTop = 50, kBottom = 70;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf"};

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double to_unit(double v) const {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        return (a - l) / (h - l);
    }
};

std::string num_label(double v) {
    char buf[48];
    if (v != 0.0 && (std::fabs(v) >= 1e5 || std::fabs(v) < 1e-3)) {
        std::snprintf(buf, sizeof buf, "%g", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
    }
    return buf;
}

std::vector<double> ticks_for(const Axis& ax) {
    std::vector<double> t;
    if (ax.log) {
        const int k0 = static_cast<int>(std::ceil(std::log10(ax.lo) - 1e-9));
        const int k1 = static_cast<int>(std::floor(std::log10(ax.hi) + 1e-9));
        const int stride = std::max(1, (k1 - k0) / 8);
        for (int k = k0; k <= k1; k += stride) t.push_back(std::pow(10.0, k));
    } else {
        const double span = ax.hi - ax.lo;
        double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
        if (span / step > 10) step *= 2;
        if (span / step > 10) step *= 2.5;
        for (double v = std::ceil(ax.lo / step) * step; v <= ax.hi + 1e-9 * span; v += step)
            t.push_back(v);
    }
    return t;
}

}  // namespace

void write_line_plot(const std::string& path, const PlotSpec& spec) {
    Axis xa{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
            spec.x_log};
    Axis ya = xa;
    ya.log = spec.y_log;
    for (const auto& s : spec.series) {
        for (auto [x, y] : s.points) {
            if (spec.x_log && x <= 0.0) continue;
            if (spec.y_log && y <= 0.0) continue;
            xa.lo = std::min(xa.lo, x);
            xa.hi = std::max(xa.hi, x);
            ya.lo = std::min(ya.lo, y);
            ya.hi = std::max(ya.hi, y);
        }
    }
    const bool empty = !std::isfinite(xa.lo) || !std::isfinite(ya.lo);
    if (empty) {  // nothing drawable (e.g. all-zero rates on a log axis)
        xa.lo = xa.log ? 1.0 : 0.0;
        xa.hi = xa.log ? 10.0 : 1.0;
        ya.lo = ya.log ? 1.0 : 0.0;
        ya.hi = ya.log ? 10.0 : 1.0;
    }
    if (!(xa.lo < xa.hi)) {
        xa.lo = xa.log ? xa.lo / 2 : xa.lo - 1;
        xa.hi = xa.log ? xa.hi * 2 : xa.hi + 1;
    }
    if (!(ya.lo < ya.hi)) {
        ya.lo = ya.log ? ya.lo / 2 : ya.lo - 1;
        ya.hi = ya.log ? ya.hi * 2 : ya.hi + 1;
    }

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + xa.to_unit(v) * pw; };
    auto py = [&](double v) { return kHeight - kBottom - ya.to_unit(v) * ph; };

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
        << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' font-size='16' "
           "font-family='sans-serif'>"
        << spec.title << "</text>\n";

    // frame
    out << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << pw << "' height='" << ph
        << "' fill='none' stroke='black'/>\n";

    for (double t : ticks_for(xa)) {
        const double x = px(t);
        out << "<line x1='" << x << "' y1='" << kHeight - kBottom << "' x2='" << x << "' y2='"
            << kHeight - kBottom + 5 << "' stroke='black'/>\n"
            << "<line x1='" << x << "' y1='" << kTop << "' x2='" << x << "' y2='"
            << kHeight - kBottom << "' stroke='#dddddd' stroke-width='0.6'/>\n"
            << "<text x='" << x << "' y='" << kHeight - kBottom + 20
            << "' text-anchor='middle' font-size='11' font-family='sans-serif'>" << num_label(t)
            << "</text>\n";
    }
    for (double t : ticks_for(ya)) {
        const double y = py(t);
        out << "<line x1='" << kLeft - 5 << "' y1='" << y << "' x2='" << kLeft << "' y2='" << y
            << "' stroke='black'/>\n"
            << "<line x1='" << kLeft << "' y1='" << y << "' x2='" << kWidth - kRight << "' y2='"
            << y << "' stroke='#dddddd' stroke-width='0.6'/>\n"
            << "<text x='" << kLeft - 8 << "' y='" << y + 4
            << "' text-anchor='end' font-size='11' font-family='sans-serif'>" << num_label(t)
            << "</text>\n";
    }

    out << "<text x='" << kLeft + pw / 2 << "' y='" << kHeight - 18
        << "' text-anchor='middle' font-size='13' font-family='sans-serif'>" << spec.x_label
        << "</text>\n"
        << "<text x='22' y='" << kTop + ph / 2
        << "' text-anchor='middle' font-size='13' font-family='sans-serif' transform='rotate(-90 "
           "22 "
        << kTop + ph / 2 << ")'>" << spec.y_label << "</text>\n";

    if (empty) {
        out << "<text x='" << kLeft + pw / 2 << "' y='" << kTop + ph / 2
            << "' text-anchor='middle' font-size='14' font-family='sans-serif'>no drawable "
               "points</text>\n";
    }

    int ci = 0;
    for (const auto& s : spec.series) {
        const char* color = kColors[ci % 7];
        std::ostringstream pts;
        bool open = false;
        auto flush = [&]() {
            if (open) out << "<polyline fill='none' stroke='" << color
                          << "' stroke-width='1.8' points='" << pts.str() << "'/>\n";
            pts.str("");
            open = false;
        };
        for (auto [x, y] : s.points) {
            const bool drawable = (!spec.x_log || x > 0.0) && (!spec.y_log || y > 0.0) &&
                                  std::isfinite(x) && std::isfinite(y);
            if (!drawable) {
                flush();
                continue;
            }
            pts << px(x) << "," << py(y) << " ";
            open = true;
        }
        flush();
        out << "<line x1='" << kWidth - kRight - 160 << "' y1='" << kTop + 16 + 18 * ci
            << "' x2='" << kWidth - kRight - 130 << "' y2='" << kTop + 16 + 18 * ci
            << "' stroke='" << color << "' stroke-width='2'/>\n"
            << "<text x='" << kWidth - kRight - 124 << "' y='" << kTop + 20 + 18 * ci
            << "' font-size='11' font-family='sans-serif'>" << s.name << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";

    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << out.str();
}

}  // namespace svgplot
