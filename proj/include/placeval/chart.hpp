#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace placeval {

struct ChartSeries {
    std::string label;
    std::map<int, double> points;  // year -> value
};

/// Line-chart description rendered to SVG. Series are truncated to the
/// intersection of their year domains; the optional vertical marker must
/// lie inside that domain.
struct ChartSpec {
    std::string title;
    std::vector<ChartSeries> series;
    std::optional<int> vertical_marker_year;
    std::string x_label = "year";
    std::string y_label;
};

/// Standalone deterministic SVG 1.1 document (fixed 800x500 viewport,
/// fixed palette, one polyline per series, legend, dashed marker line).
/// Identical specs produce identical bytes.
std::string render_svg_chart(const ChartSpec& spec);

/// render_svg_chart written to `path`; throws IoError on failure.
void emit_svg_chart(const ChartSpec& spec, const std::string& path);

}  // namespace placeval
