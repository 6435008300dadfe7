#pragma once

// Sweep tables as CSV and as a static SVG line chart.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "blsmech/design.hpp"
#include "blsmech/error.hpp"
#include "blsmech/format.hpp"
#include "blsmech/io.hpp"

namespace blsmech {

inline std::string sweep_to_csv(const SweepTable& table) {
    std::string out = "lambda,alpha_rad,F_alpha,k_N_per_mm\n";
    for (const auto& r : table.rows) {
        out += format_csv_number(r.lambda) + ',' + format_csv_number(r.alpha) + ',' + format_csv_number(r.F_alpha) + ',';
        if (r.k) out += format_csv_number(*r.k);
        out += '\n';
    }
    return out;
}

enum class PlotQuantity { EvaluationFunction, Stiffness };

namespace detail {

inline constexpr double kSvgWidth = 800.0;
inline constexpr double kSvgHeight = 600.0;
inline constexpr double kPlotLeft = 90.0;
inline constexpr double kPlotRight = 650.0;
inline constexpr double kPlotTop = 40.0;
inline constexpr double kPlotBottom = 530.0;

inline const char* series_colour(std::size_t i) {
    static constexpr const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                              "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[i % (sizeof palette / sizeof palette[0])];
}

inline std::string svg_num(double v) { return format_fixed(v, 2); }

}  // namespace detail

inline std::string sweep_to_svg(const SweepTable& table, PlotQuantity quantity = PlotQuantity::EvaluationFunction) {
    using namespace detail;
    detail::require_valid(!table.rows.empty(), "cannot plot an empty sweep table");
    const bool use_k = quantity == PlotQuantity::Stiffness;
    detail::require_valid(!use_k || table.has_stiffness(), "sweep table carries no stiffness column");
    auto y_of = [&](const SweepRow& r) { return use_k ? *r.k : r.F_alpha; };

    double x_lo = table.rows.front().alpha, x_hi = x_lo;
    double y_lo = y_of(table.rows.front()), y_hi = y_lo;
    for (const auto& r : table.rows) {
        x_lo = std::min(x_lo, r.alpha);
        x_hi = std::max(x_hi, r.alpha);
        y_lo = std::min(y_lo, y_of(r));
        y_hi = std::max(y_hi, y_of(r));
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    const double pad = y_hi > y_lo ? 0.05 * (y_hi - y_lo) : std::max(0.05 * std::abs(y_hi), 1e-3);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return kPlotLeft + (x - x_lo) / (x_hi - x_lo) * (kPlotRight - kPlotLeft); };
    auto py = [&](double y) { return kPlotBottom - (y - y_lo) / (y_hi - y_lo) * (kPlotBottom - kPlotTop); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    s += "<g stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + svg_num(kPlotLeft) + "\" y1=\"" + svg_num(kPlotBottom) + "\" x2=\"" + svg_num(kPlotRight) +
         "\" y2=\"" + svg_num(kPlotBottom) + "\"/>\n";
    s += "<line x1=\"" + svg_num(kPlotLeft) + "\" y1=\"" + svg_num(kPlotTop) + "\" x2=\"" + svg_num(kPlotLeft) +
         "\" y2=\"" + svg_num(kPlotBottom) + "\"/>\n";
    s += "</g>\n";

    s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    constexpr int kTicks = 5;
    for (int i = 0; i < kTicks; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / (kTicks - 1);
        const double yv = y_lo + (y_hi - y_lo) * i / (kTicks - 1);
        s += "<text x=\"" + svg_num(px(xv)) + "\" y=\"" + svg_num(kPlotBottom + 18) + "\" text-anchor=\"middle\">" +
             format_g(xv, 3) + "</text>\n";
        s += "<text x=\"" + svg_num(kPlotLeft - 8) + "\" y=\"" + svg_num(py(yv) + 4) + "\" text-anchor=\"end\">" +
             format_g(yv, 3) + "</text>\n";
    }
    s += "<text x=\"" + svg_num(0.5 * (kPlotLeft + kPlotRight)) + "\" y=\"" + svg_num(kPlotBottom + 45) +
         "\" text-anchor=\"middle\">bending angle (rad)</text>\n";
    s += "<text x=\"25\" y=\"" + svg_num(0.5 * (kPlotTop + kPlotBottom)) + "\" text-anchor=\"middle\" transform=\"rotate(-90 25 " +
         svg_num(0.5 * (kPlotTop + kPlotBottom)) + ")\">" + (use_k ? "k (N/mm)" : "F(alpha)") + "</text>\n";
    s += "</g>\n";

    const std::vector<double> lambdas = table.lambdas();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        std::string pts;
        for (const auto& r : table.rows) {
            if (r.lambda != lambdas[i]) continue;
            if (!pts.empty()) pts += ' ';
            pts += svg_num(px(r.alpha)) + ',' + svg_num(py(y_of(r)));
        }
        s += "<polyline fill=\"none\" stroke=\"" + std::string(series_colour(i)) + "\" stroke-width=\"2\" points=\"" + pts +
             "\"/>\n";
    }

    s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const double y = kPlotTop + 10 + 20.0 * static_cast<double>(i);
        s += "<line x1=\"670\" y1=\"" + svg_num(y) + "\" x2=\"700\" y2=\"" + svg_num(y) + "\" stroke=\"" +
             series_colour(i) + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"708\" y=\"" + svg_num(y + 4) + "\">lambda = " + format_g(lambdas[i], 4) + "</text>\n";
    }
    s += "</g>\n";
    s += "</svg>\n";
    return s;
}

inline void emit_csv(const SweepTable& table, const std::string& path) {
    detail::require_valid(!table.rows.empty(), "cannot write an empty sweep table");
    write_file(path, sweep_to_csv(table));
}

inline void emit_svg(const SweepTable& table, const std::string& path,
                     PlotQuantity quantity = PlotQuantity::EvaluationFunction) {
    write_file(path, sweep_to_svg(table, quantity));
}

}  // namespace blsmech
