#pragma once

// Minimal static SVG line plots, enough to stand in for the usual
// dispatch-sensitivity figures: one polyline per series, axes with tick
// labels, optional vertical marker lines, legend. Output is a pure
// function of the inputs, so identical calls produce identical bytes.

#include <string>
#include <vector>

namespace dispatchkit {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

std::string render_line_plot(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<PlotSeries>& series,
                             const std::vector<double>& vertical_markers = {});

}  // namespace dispatchkit
