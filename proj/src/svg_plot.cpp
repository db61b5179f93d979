#include "dispatchkit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dispatchkit/errors.hpp"

namespace dispatchkit {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = kWidth - 170.0;  // room for the legend
constexpr double kTop = 50.0;
constexpr double kBottom = kHeight - 60.0;
constexpr int kTicks = 5;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (const char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void widen_if_flat() {
        if (!(hi > lo)) {
            lo -= 1.0;
            hi += 1.0;
        }
    }
};

}  // namespace

std::string render_line_plot(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<PlotSeries>& series,
                             const std::vector<double>& vertical_markers) {
    if (series.empty()) {
        throw InputError("plot: need at least one series");
    }
    Range xr, yr;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty()) {
            throw InputError("plot: series '" + s.label +
                             "' needs matching non-empty x/y");
        }
        for (const double v : s.x) xr.include(v);
        for (const double v : s.y) yr.include(v);
    }
    xr.widen_if_flat();
    yr.widen_if_flat();

    const auto px = [&](double x) {
        return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
    };
    const auto py = [&](double y) {
        return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth, "%.0f") +
           "\" height=\"" + num(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
           num(kWidth, "%.0f") + " " + num(kHeight, "%.0f") + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(0.5 * (kLeft + kRight)) + "\" y=\"28\" "
           "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape(title) + "</text>\n";

    // axes
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
           num(kRight) + "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";

    for (int k = 0; k <= kTicks; ++k) {
        const double fx = xr.lo + (xr.hi - xr.lo) * k / kTicks;
        const double gx = px(fx);
        svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
               num(gx) + "\" y2=\"" + num(kBottom + 5.0) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(gx) + "\" y=\"" + num(kBottom + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" + num(fx, "%.4g") + "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * k / kTicks;
        const double gy = py(fy);
        svg += "<line x1=\"" + num(kLeft - 5.0) + "\" y1=\"" + num(gy) + "\" x2=\"" +
               num(kLeft) + "\" y2=\"" + num(gy) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(gy + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">" + num(fy, "%.4g") + "</text>\n";
    }

    svg += "<text x=\"" + num(0.5 * (kLeft + kRight)) + "\" y=\"" +
           num(kHeight - 14.0) + "\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\">" + escape(x_label) +
           "</text>\n";
    svg += "<text x=\"20\" y=\"" + num(0.5 * (kTop + kBottom)) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 " + num(0.5 * (kTop + kBottom)) + ")\">" +
           escape(y_label) + "</text>\n";

    for (const double marker : vertical_markers) {
        if (marker < xr.lo || marker > xr.hi) continue;
        svg += "<line class=\"marker\" x1=\"" + num(px(marker)) + "\" y1=\"" +
               num(kTop) + "\" x2=\"" + num(px(marker)) + "\" y2=\"" + num(kBottom) +
               "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "<polyline class=\"series\" fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (i) svg += ' ';
            svg += num(px(series[s].x[i])) + "," + num(py(series[s].y[i]));
        }
        svg += "\"/>\n";

        const double ly = kTop + 18.0 * static_cast<double>(s);
        svg += "<line x1=\"" + num(kRight + 12.0) + "\" y1=\"" + num(ly) +
               "\" x2=\"" + num(kRight + 34.0) + "\" y2=\"" + num(ly) +
               "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.8\"/>\n";
        svg += "<text x=\"" + num(kRight + 40.0) + "\" y=\"" + num(ly + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(series[s].label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace dispatchkit
