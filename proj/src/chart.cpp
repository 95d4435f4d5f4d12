#include "placeval/chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "placeval/errors.hpp"

namespace placeval {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 25;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

// 1/2/5 * 10^k step targeting at most `max_ticks` intervals.
double nice_step(double span, int max_ticks, int* decimals) {
    const double raw = span / std::max(1, max_ticks);
    const int e = static_cast<int>(std::floor(std::log10(raw)));
    const double base = std::pow(10.0, e);
    double step = 10.0 * base;
    for (double mult : {1.0, 2.0, 5.0}) {
        if (mult * base >= raw) {
            step = mult * base;
            break;
        }
    }
    *decimals = std::max(0, -(step >= 10.0 * base ? e + 1 : e));
    return step;
}

}  // namespace

std::string render_svg_chart(const ChartSpec& spec) {
    if (spec.series.empty()) throw ArgumentError("chart needs at least one series");

    // intersection of the year domains
    std::set<int> domain;
    for (const auto& [year, value] : spec.series[0].points) domain.insert(year);
    for (std::size_t s = 1; s < spec.series.size(); ++s) {
        std::set<int> keep;
        for (const auto& [year, value] : spec.series[s].points)
            if (domain.count(year)) keep.insert(year);
        domain.swap(keep);
    }
    if (domain.empty()) throw ArgumentError("chart series share no years");
    const int x0 = *domain.begin();
    const int x1 = *domain.rbegin();
    if (spec.vertical_marker_year && (*spec.vertical_marker_year < x0 || *spec.vertical_marker_year > x1))
        throw ArgumentError("marker year outside the chart domain");

    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -ymin;
    for (const auto& series : spec.series) {
        for (int year : domain) {
            const double v = series.points.at(year);
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (ymin == ymax) {
        const double pad = std::max(0.5, std::fabs(ymin) * 0.1);
        ymin -= pad;
        ymax += pad;
    } else {
        const double pad = (ymax - ymin) * 0.05;
        ymin -= pad;
        ymax += pad;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double x_span = std::max(1, x1 - x0);
    auto px = [&](int year) {
        return kMarginLeft + (static_cast<double>(year - x0) / x_span) * plot_w;
    };
    auto py = [&](double v) {
        return kMarginTop + (1.0 - (v - ymin) / (ymax - ymin)) * plot_h;
    };

    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n",
        kWidth, kHeight);
    svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"28\" font-family=\"sans-serif\" font-size=\"17\" "
        "text-anchor=\"middle\">{}</text>\n",
        kWidth / 2.0, xml_escape(spec.title));

    // y grid and ticks
    int y_dec = 0;
    const double y_step = nice_step(ymax - ymin, 8, &y_dec);
    for (double v = std::ceil(ymin / y_step) * y_step; v <= ymax + 1e-12; v += y_step) {
        const double yy = py(v);
        svg += fmt::format(
            "<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#dddddd\" "
            "stroke-width=\"1\"/>\n",
            kMarginLeft, yy, kWidth - kMarginRight, yy);
        svg += fmt::format(
            "<text x=\"{}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"end\">{:.{}f}</text>\n",
            kMarginLeft - 8, yy + 4, v, y_dec);
    }

    // x ticks on integer years
    int x_tick_step = 1;
    while ((x1 - x0) / x_tick_step > 12) {
        x_tick_step = x_tick_step == 1 ? 2 : (x_tick_step == 2 ? 5 : x_tick_step * 2);
    }
    for (int year = x0; year <= x1; ++year) {
        if ((year - x0) % x_tick_step != 0) continue;
        const double xx = px(year);
        svg += fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\" stroke=\"#999999\" "
            "stroke-width=\"1\"/>\n",
            xx, kHeight - kMarginBottom, xx, kHeight - kMarginBottom + 5);
        svg += fmt::format(
            "<text x=\"{:.2f}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"middle\">{}</text>\n",
            xx, kHeight - kMarginBottom + 20, year);
    }

    // axes
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        kMarginLeft, kMarginTop, kHeight - kMarginBottom);
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        kMarginLeft, kHeight - kMarginBottom, kWidth - kMarginRight);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" "
        "text-anchor=\"middle\">{}</text>\n",
        kMarginLeft + plot_w / 2.0, kHeight - 12, xml_escape(spec.x_label));
    if (!spec.y_label.empty())
        svg += fmt::format(
            "<text x=\"18\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"13\" "
            "text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2f})\">{}</text>\n",
            kMarginTop + plot_h / 2.0, kMarginTop + plot_h / 2.0, xml_escape(spec.y_label));

    // intervention marker
    if (spec.vertical_marker_year) {
        const double xx = px(*spec.vertical_marker_year);
        svg += fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"#555555\" "
            "stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n",
            xx, kMarginTop, kHeight - kMarginBottom);
    }

    // series polylines
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        std::string points;
        for (int year : domain)
            points += fmt::format("{:.2f},{:.2f} ", px(year), py(spec.series[s].points.at(year)));
        if (!points.empty()) points.pop_back();
        svg += fmt::format(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n",
            kPalette[s % kPaletteSize], points);
    }

    // legend, top-right inside the plot
    const double lx = kWidth - kMarginRight - 200;
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const double ly = kMarginTop + 10 + 18.0 * static_cast<double>(s);
        svg += fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
            "stroke-width=\"2\"/>\n",
            lx, ly, lx + 22, ly, kPalette[s % kPaletteSize]);
        svg += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
            "font-size=\"12\">{}</text>\n",
            lx + 28, ly + 4, xml_escape(spec.series[s].label));
    }

    svg += "</svg>\n";
    return svg;
}

void emit_svg_chart(const ChartSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << render_svg_chart(spec);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace placeval
