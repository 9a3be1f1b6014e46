#pragma once

#include <string>
#include <vector>

namespace eads_cli {

// Minimal self-contained scatter plots. One <circle> element per data point,
// so plots stay checkable against their companion CSV row counts.

struct PlotPoint {
    double x;
    double y;
    int style; // index into kSeriesColors
};

struct ScatterPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotPoint> points;
    std::vector<std::pair<double, double>> outline; // optional closed curve
    std::vector<std::pair<int, std::string>> legend; // style -> caption
};

std::string render_svg(const ScatterPlot& plot);

void write_svg(const std::string& path, const ScatterPlot& plot);

} // namespace eads_cli
