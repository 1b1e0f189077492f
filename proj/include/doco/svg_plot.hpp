#pragma once

#include <string>
#include <vector>

namespace doco {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 760;
    int height = 480;
};

// Minimal static line chart written as SVG (vector image). Refuses empty
// input so a failed run never leaves an empty artifact behind.
void write_svg_chart(const std::string& path, const std::vector<PlotSeries>& series,
                     const PlotOptions& options);

}  // namespace doco
