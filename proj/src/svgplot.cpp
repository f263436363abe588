#include "toepcomm/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"

namespace toepcomm {

namespace {

// fixed winding palette: 0 white, 1 light, 2 medium, >= 3 dark, on-curve gray
const char* palette_color(int winding) {
    switch (winding) {
        case 0: return "#ffffff";
        case 1: return "#c6dbef";
        case 2: return "#6baed6";
        default: return "#2171b5";
    }
}
constexpr const char* kCurveColor = "#888888";

struct RayCrossing {
    double x;
    int sign;
};

std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string winding_plot_svg(const TaylorSymbol& s, const PlotConfig& cfg) {
    const BoundaryCurve curve(s, cfg.curve_nodes);
    const auto& nodes = curve.nodes();
    const std::size_t m = nodes.size();

    double min_x = nodes[0].real(), max_x = nodes[0].real();
    double min_y = nodes[0].imag(), max_y = nodes[0].imag();
    for (const Complex& p : nodes) {
        min_x = std::min(min_x, p.real());
        max_x = std::max(max_x, p.real());
        min_y = std::min(min_y, p.imag());
        max_y = std::max(max_y, p.imag());
    }
    const double pad_x = std::max(1e-9, (max_x - min_x) * cfg.padding);
    const double pad_y = std::max(1e-9, (max_y - min_y) * cfg.padding);
    min_x -= pad_x;
    max_x += pad_x;
    min_y -= pad_y;
    max_y += pad_y;

    const double width = max_x - min_x;
    const double height = max_y - min_y;
    const int canvas = cfg.canvas;
    const auto to_px_x = [&](double x) { return (x - min_x) / width * canvas; };
    const auto to_px_y = [&](double y) { return (max_y - y) / height * canvas; };

    const int raster = cfg.raster;
    const double cell_w = width / raster;
    const double cell_h = height / raster;

    // cells the polyline passes through render gray
    std::vector<char> on_curve(static_cast<std::size_t>(raster) * raster, 0);
    const double step = 0.25 * std::min(cell_w, cell_h);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex a = nodes[j];
        const Complex b = nodes[(j + 1) % m];
        const int pieces = 1 + static_cast<int>(std::abs(b - a) / step);
        for (int t = 0; t <= pieces; ++t) {
            const Complex p = a + (b - a) * (static_cast<double>(t) / pieces);
            const int col = std::clamp(static_cast<int>((p.real() - min_x) / cell_w), 0, raster - 1);
            const int row = std::clamp(static_cast<int>((max_y - p.imag()) / cell_h), 0, raster - 1);
            on_curve[static_cast<std::size_t>(row) * raster + col] = 1;
        }
    }

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='" + std::to_string(canvas) +
           "' height='" + std::to_string(canvas) + "' viewBox='0 0 " + std::to_string(canvas) +
           " " + std::to_string(canvas) + "'>\n";
    svg += "<rect width='" + std::to_string(canvas) + "' height='" + std::to_string(canvas) +
           "' fill='#ffffff'/>\n";

    // scanline winding fill: signed horizontal-ray crossings per row, so
    // each row costs one pass over the polyline
    std::vector<RayCrossing> crossings;
    for (int row = 0; row < raster; ++row) {
        const double y = max_y - (row + 0.5) * cell_h;
        crossings.clear();
        for (std::size_t j = 0; j < m; ++j) {
            const Complex a = nodes[j];
            const Complex b = nodes[(j + 1) % m];
            if (a.imag() <= y && b.imag() > y)
                crossings.push_back(
                    {a.real() + (y - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag()), +1});
            else if (b.imag() <= y && a.imag() > y)
                crossings.push_back(
                    {a.real() + (y - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag()), -1});
        }
        std::sort(crossings.begin(), crossings.end(),
                  [](const RayCrossing& p, const RayCrossing& q) { return p.x < q.x; });

        int run_start = 0;
        std::string run_color;
        const auto flush = [&](int end_col) {
            if (run_color.empty() || run_color == "#ffffff") return;
            svg += "<rect x='" + fmt_px(static_cast<double>(run_start) / raster * canvas) +
                   "' y='" + fmt_px(static_cast<double>(row) / raster * canvas) + "' width='" +
                   fmt_px(static_cast<double>(end_col - run_start) / raster * canvas) +
                   "' height='" + fmt_px(static_cast<double>(canvas) / raster) + "' fill='" +
                   run_color + "'/>\n";
        };
        std::size_t next_crossing = 0;
        int winding = 0;
        for (int col = 0; col < raster; ++col) {
            const double x = min_x + (col + 0.5) * cell_w;
            while (next_crossing < crossings.size() && crossings[next_crossing].x < x)
                winding += crossings[next_crossing++].sign;
            const char* color = on_curve[static_cast<std::size_t>(row) * raster + col]
                                    ? kCurveColor
                                    : palette_color(std::abs(winding));
            if (color != run_color) {
                flush(col);
                run_color = color;
                run_start = col;
            }
        }
        flush(raster);
    }

    // the image curve polyline on top
    svg += "<polyline fill='none' stroke='#000000' stroke-width='1.5' points='";
    for (std::size_t j = 0; j <= m; ++j) {
        const Complex p = nodes[j % m];
        if (j) svg += ' ';
        svg += fmt_px(to_px_x(p.real())) + "," + fmt_px(to_px_y(p.imag()));
    }
    svg += "'/>\n</svg>\n";
    return svg;
}

}  // namespace toepcomm
