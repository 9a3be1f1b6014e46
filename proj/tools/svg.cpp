#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "text_format.hpp"

namespace eads_cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 52.0;

const char* kSeriesColors[] = {"#3182ce", "#e53e3e", "#38a169", "#805ad5"};

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

std::string num(double v) {
    // Plot coordinates do not need full precision; 4 decimals keeps files
    // small and still deterministic.
    double rounded = std::round(v * 10000.0) / 10000.0;
    if (rounded == 0.0) rounded = 0.0; // normalize -0
    return format_double(rounded);
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const ScatterPlot& plot) {
    bool any = false;
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    auto include = [&](double x, double y) {
        if (!any) {
            min_x = max_x = x;
            min_y = max_y = y;
            any = true;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    };
    for (const auto& p : plot.points) include(p.x, p.y);
    for (const auto& [x, y] : plot.outline) include(x, y);

    auto pad = [](double& lo, double& hi) {
        double span = hi - lo;
        if (span <= 0) span = std::max(std::abs(lo), 1.0);
        lo -= 0.05 * span;
        hi += 0.05 * span;
    };
    pad(min_x, max_x);
    pad(min_y, max_y);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) {
        return kMarginLeft + (x - min_x) / (max_x - min_x) * plot_w;
    };
    auto sy = [&](double y) {
        return kMarginTop + plot_h - (y - min_y) / (max_y - min_y) * plot_h;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
           " " + num(kHeight) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" font-family=\"sans-serif\" "
           "font-size=\"15\" text-anchor=\"middle\">" + escape(plot.title) +
           "</text>\n";

    // frame
    svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#4a5568\" stroke-width=\"1\"/>\n";

    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double fx = min_x + (max_x - min_x) * i / 5.0;
        const double px = sx(fx);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kMarginTop + plot_h) +
               "\" x2=\"" + num(px) + "\" y2=\"" + num(kMarginTop + plot_h + 5) +
               "\" stroke=\"#4a5568\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" + num(kMarginTop + plot_h + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"middle\">" + num(fx) + "</text>\n";

        const double fy = min_y + (max_y - min_y) * i / 5.0;
        const double py = sy(fy);
        svg += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(py) +
               "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(py) +
               "\" stroke=\"#4a5568\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft - 8) + "\" y=\"" + num(py + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"end\">" + num(fy) + "</text>\n";
    }

    svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" +
           num(kHeight - 12) + "\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
    svg += "<text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " + num(kMarginTop + plot_h / 2) +
           ")\">" + escape(plot.y_label) + "</text>\n";

    if (!plot.outline.empty()) {
        std::string pts;
        for (const auto& [x, y] : plot.outline) {
            if (!pts.empty()) pts += " ";
            pts += num(sx(x)) + "," + num(sy(y));
        }
        // close the curve
        pts += " " + num(sx(plot.outline.front().first)) + "," +
               num(sy(plot.outline.front().second));
        svg += "<polyline points=\"" + pts +
               "\" fill=\"none\" stroke=\"#2b6cb0\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& p : plot.points) {
        const char* color =
            kSeriesColors[p.style >= 0 && p.style < 4 ? p.style : 0];
        svg += "<circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
               "\" r=\"3\" fill=\"" + color + "\" fill-opacity=\"0.75\"/>\n";
    }

    double ly = kMarginTop + 14;
    for (const auto& [style, caption] : plot.legend) {
        const char* color =
            kSeriesColors[style >= 0 && style < 4 ? style : 0];
        // legend swatches are rects, keeping circles reserved for data marks
        svg += "<rect x=\"" + num(kMarginLeft + 10) + "\" y=\"" + num(ly - 8) +
               "\" width=\"10\" height=\"10\" fill=\"" + std::string(color) +
               "\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft + 26) + "\" y=\"" + num(ly + 1) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(caption) + "</text>\n";
        ly += 16;
    }

    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::string& path, const ScatterPlot& plot) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << render_svg(plot);
    out.flush();
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

} // namespace eads_cli
