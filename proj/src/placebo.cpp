#include "placeval/placebo.hpp"

#include <cmath>

namespace placeval {
namespace {

std::vector<int> year_span(int from, int to) {
    std::vector<int> out;
    for (int y = from; y <= to; ++y) out.push_back(y);
    return out;
}

std::vector<double> treated_values(const OutcomePanel& panel, const std::string& unit,
                                   const std::vector<int>& years) {
    const std::size_t u = panel.unit_index(unit);
    std::vector<double> out;
    out.reserve(years.size());
    for (int y : years) out.push_back(panel.value_at(panel.year_index(y), u));
    return out;
}

}  // namespace

PathComparison compare_paths(const std::vector<double>& a, const std::vector<double>& b,
                             const std::vector<int>& years) {
    if (a.size() != b.size() || a.size() != years.size())
        throw ArgumentError("compare_paths needs equal-length vectors");
    if (a.empty()) throw ArgumentError("compare_paths needs nonempty vectors");

    PathComparison cmp;
    double sq = 0.0;
    std::size_t agree = 0;
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
        cmp.max_abs_gap = std::max(cmp.max_abs_gap, std::fabs(d));
        if (sgn(a[i]) == sgn(b[i])) ++agree;
    }
    cmp.rmse = std::sqrt(sq / static_cast<double>(a.size()));
    cmp.sign_agreement = static_cast<double>(agree) / static_cast<double>(a.size());
    return cmp;
}

PlaceboReport placebo_in_time(const OutcomePanel& panel, const EvaluationConfig& config,
                              int placebo_year, int threads) {
    config.validate(panel);
    if (placebo_year > config.intervention_year)
        throw ArgumentError("placebo year must not be later than the intervention year");
    const int first_year = panel.years().front();
    const int last_year = panel.years().back();
    if (placebo_year - first_year + 1 < 4)
        throw ArgumentError("placebo year leaves fewer than 4 pre-period years");

    EvaluationConfig placebo_config = config;
    placebo_config.intervention_year = placebo_year;

    PlaceboReport report;
    report.placebo_year = placebo_year;
    report.selection = select_control_group(panel, placebo_config, threads);

    const auto placebo_post = year_span(placebo_year + 1, last_year);
    const auto placebo_cf = predict_counterfactual(report.selection.chosen, panel, placebo_post);
    const auto placebo_actual = treated_values(panel, config.treated_unit, placebo_post);
    report.effects = treatment_effects(placebo_actual, placebo_cf, placebo_post);

    const auto pre_years = year_span(first_year, placebo_year);
    const auto fitted = predict_counterfactual(report.selection.chosen, panel, pre_years);
    const auto pre_actual = treated_values(panel, config.treated_unit, pre_years);
    double sq = 0.0;
    for (std::size_t i = 0; i < fitted.size(); ++i) {
        const double d = pre_actual[i] - fitted[i];
        sq += d * d;
    }
    report.pre_fit_rmse = std::sqrt(sq / static_cast<double>(fitted.size()));

    // Original-run counterfactual on its own post years; identical placebo
    // and intervention years reuse the placebo fit (same search).
    const ControlSelection original =
        placebo_year == config.intervention_year ? report.selection
                                                 : select_control_group(panel, config, threads);
    const auto original_post = year_span(config.intervention_year + 1, last_year);
    const auto original_cf = predict_counterfactual(original.chosen, panel, original_post);
    const auto original_actual = treated_values(panel, config.treated_unit, original_post);

    report.overlap_comparison.reserve(original_post.size());
    for (std::size_t i = 0; i < original_post.size(); ++i) {
        OverlapPoint pt;
        pt.year = original_post[i];
        pt.actual = original_actual[i];
        pt.original_cf = original_cf[i];
        // placebo post years contain all original post years
        pt.placebo_cf = placebo_cf[static_cast<std::size_t>(original_post[i] - placebo_year - 1)];
        report.overlap_comparison.push_back(pt);
    }
    return report;
}

}  // namespace placeval
