#include "placeval/report.hpp"

#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

namespace placeval {
namespace {

using nlohmann::json;

json fit_to_json(const OLSFit& fit) {
    json j;
    j["control_units"] = fit.control_units;
    j["intercept"] = fit.intercept;
    j["coefficients"] = fit.coefficients;
    j["rss"] = fit.rss;
    j["r_squared"] = fit.r_squared;
    j["aic"] = fit.aic;
    j["std_errors"] = fit.std_errors;
    j["t_values"] = fit.t_values;
    j["p_values"] = fit.p_values;
    j["n_obs"] = fit.n_obs;
    j["df_resid"] = fit.df_resid;
    return j;
}

json selection_to_json(const ControlSelection& selection) {
    json j;
    j["chosen"] = fit_to_json(selection.chosen);
    json winners = json::array();
    for (const auto& [size, fit] : selection.per_size_winners) {
        json w;
        w["size"] = size;
        w["control_units"] = fit.control_units;
        w["r_squared"] = fit.r_squared;
        w["aic"] = fit.aic;
        winners.push_back(w);
    }
    j["per_size_winners"] = winners;
    j["search_space_size"] = selection.search_space_size;
    j["rank_deficient_skipped"] = selection.rank_deficient_skipped;
    return j;
}

json effects_to_json(const TreatmentEffectSeries& effects) {
    json j;
    j["years"] = effects.years;
    j["actual"] = effects.actual;
    j["counterfactual"] = effects.counterfactual;
    j["effect"] = effects.effect;
    j["mean_effect"] = effects.mean_effect;
    return j;
}

}  // namespace

std::string effects_csv(const TreatmentEffectSeries& effects) {
    std::string out = "year,actual,counterfactual,effect\n";
    for (std::size_t i = 0; i < effects.years.size(); ++i)
        out += fmt::format("{},{},{},{}\n", effects.years[i], effects.actual[i],
                           effects.counterfactual[i], effects.effect[i]);
    return out;
}

std::string placebo_paths_csv(const std::vector<int>& years, const std::vector<double>& actual,
                              const std::vector<double>& original_cf,
                              const std::vector<double>& placebo_cf) {
    if (years.size() != actual.size() || years.size() != original_cf.size() ||
        years.size() != placebo_cf.size())
        throw ArgumentError("paths CSV needs equal-length columns");
    std::string out = "year,actual,original_cf,placebo_cf\n";
    for (std::size_t i = 0; i < years.size(); ++i)
        out += fmt::format("{},{},{},{}\n", years[i], actual[i], original_cf[i], placebo_cf[i]);
    return out;
}

std::string selection_json(const ControlSelection& selection) {
    return selection_to_json(selection).dump(2) + "\n";
}

std::string placebo_json(const PlaceboReport& report) {
    json j;
    j["placebo_year"] = report.placebo_year;
    j["pre_fit_rmse"] = report.pre_fit_rmse;
    j["selection"] = selection_to_json(report.selection);
    j["effects"] = effects_to_json(report.effects);

    json overlap = json::array();
    std::vector<double> original_gap, placebo_gap;
    std::vector<int> overlap_years;
    for (const auto& pt : report.overlap_comparison) {
        json row;
        row["year"] = pt.year;
        row["actual"] = pt.actual;
        row["original_cf"] = pt.original_cf;
        row["placebo_cf"] = pt.placebo_cf;
        overlap.push_back(row);
        original_gap.push_back(pt.actual - pt.original_cf);
        placebo_gap.push_back(pt.actual - pt.placebo_cf);
        overlap_years.push_back(pt.year);
    }
    j["overlap_comparison"] = overlap;
    if (!overlap_years.empty()) {
        const auto cmp = compare_paths(original_gap, placebo_gap, overlap_years);
        j["gap_comparison"] = {{"rmse", cmp.rmse},
                               {"max_abs_gap", cmp.max_abs_gap},
                               {"sign_agreement", cmp.sign_agreement}};
    }
    return j.dump(2) + "\n";
}

std::string render_effects_table(const TreatmentEffectSeries& effects,
                                 const std::string& outcome_label) {
    std::string out;
    if (!outcome_label.empty()) out += "outcome: " + outcome_label + "\n";
    out += fmt::format("{:<6}  {:>12}  {:>16}  {:>10}\n", "year", "actual", "counterfactual",
                       "effect");
    double sa = 0.0, sc = 0.0, se = 0.0;
    for (std::size_t i = 0; i < effects.years.size(); ++i) {
        out += fmt::format("{:<6}  {:>12.2f}  {:>16.2f}  {:>10.2f}\n", effects.years[i],
                           effects.actual[i], effects.counterfactual[i], effects.effect[i]);
        sa += effects.actual[i];
        sc += effects.counterfactual[i];
        se += effects.effect[i];
    }
    const double n = static_cast<double>(effects.years.size());
    out += fmt::format("{:<6}  {:>12.2f}  {:>16.2f}  {:>10.2f}\n", "mean", sa / n, sc / n, se / n);
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace placeval
