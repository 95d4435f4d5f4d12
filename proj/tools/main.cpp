#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "placeval/chart.hpp"
#include "placeval/dea.hpp"
#include "placeval/panel.hpp"
#include "placeval/placebo.hpp"
#include "placeval/report.hpp"
#include "placeval/selection.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;   // bad input or I/O failure
constexpr int kExitMethod = 2;  // selection/feasibility failure

bool g_quiet = false;

void log_stage(const std::string& msg) {
    if (!g_quiet) std::cerr << "[placeval] " << msg << "\n";
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

// Evaluation settings assembled from an optional JSON config file with
// command-line flags taking precedence.
struct EvalArgs {
    std::string panel_path;
    std::string treated;
    int intervention_year = 0;
    std::string exclude_csv;
    int max_size = 0;
    std::string aic_variant = "aicc";
    std::string outcome_label = "outcome";
    std::string out_dir;
    int offset = 2;
};

void apply_config_file(const std::string& path, CLI::App* sub, EvalArgs& args) {
    std::ifstream in(path);
    if (!in) throw placeval::IoError("cannot open config " + path);
    json cfg = json::parse(in);

    auto unset = [&](const std::string& flag) {
        auto* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() == 0;
    };
    if (cfg.contains("treated_unit") && unset("--treated"))
        args.treated = cfg["treated_unit"].get<std::string>();
    if (cfg.contains("intervention_year") && unset("--intervention-year"))
        args.intervention_year = cfg["intervention_year"].get<int>();
    if (cfg.contains("outcome_label") && unset("--outcome-label"))
        args.outcome_label = cfg["outcome_label"].get<std::string>();
    if (cfg.contains("excluded_units") && unset("--exclude")) {
        std::string joined;
        for (const auto& u : cfg["excluded_units"]) {
            if (!joined.empty()) joined += ",";
            joined += u.get<std::string>();
        }
        args.exclude_csv = joined;
    }
    if (cfg.contains("max_subset_size") && unset("--max-size"))
        args.max_size = cfg["max_subset_size"].get<int>();
    if (cfg.contains("aic_variant") && unset("--aic-variant"))
        args.aic_variant = cfg["aic_variant"].get<std::string>();
}

placeval::EvaluationConfig build_config(const EvalArgs& args) {
    placeval::EvaluationConfig cfg;
    cfg.treated_unit = args.treated;
    cfg.intervention_year = args.intervention_year;
    cfg.outcome_label = args.outcome_label;
    cfg.excluded_units = split_commas(args.exclude_csv);
    if (args.max_size > 0) cfg.max_subset_size = args.max_size;
    if (args.aic_variant == "aicc")
        cfg.aic_variant = placeval::AicVariant::Aicc;
    else if (args.aic_variant != "aic")
        throw placeval::ArgumentError("aic variant must be 'aic' or 'aicc'");
    return cfg;
}

std::vector<int> all_years(const placeval::OutcomePanel& panel) { return panel.years(); }

int run_dea(const std::string& input, const std::string& out, int threads) {
    log_stage("loading efficiency dataset " + input);
    const auto data = placeval::load_dea_dataset(input);
    log_stage("scoring " + std::to_string(data.n_years() * data.n_units()) + " unit-years");
    const auto panel = placeval::efficiency_table(data, threads);
    placeval::write_outcome_panel(panel, out);
    log_stage("wrote " + out);
    std::cout << placeval::render_panel_table(panel);

    const auto flagged = panel.flagged_cells();
    for (const auto& [year, unit] : flagged)
        std::cerr << "warning: infeasible score for " << unit << " in " << year
                  << " (rendered as INF)\n";
    return kExitOk;
}

int run_evaluate(const EvalArgs& args, int threads) {
    log_stage("loading panel " + args.panel_path);
    const auto panel = placeval::load_outcome_panel(args.panel_path, args.outcome_label);
    const auto config = build_config(args);
    fs::create_directories(args.out_dir);

    log_stage("searching control subsets");
    const auto selection = placeval::select_control_group(panel, config, threads);

    std::vector<int> post_years;
    for (int y = config.intervention_year + 1; y <= panel.years().back(); ++y)
        post_years.push_back(y);
    const auto counterfactual =
        placeval::predict_counterfactual(selection.chosen, panel, post_years);
    std::vector<double> actual;
    for (int y : post_years) actual.push_back(panel.value(y, config.treated_unit));
    const auto effects = placeval::treatment_effects(actual, counterfactual, post_years);

    placeval::write_text_file(args.out_dir + "/selection.json",
                              placeval::selection_json(selection));
    placeval::write_text_file(args.out_dir + "/effects.csv", placeval::effects_csv(effects));

    const auto years = all_years(panel);
    const auto full_cf = placeval::predict_counterfactual(selection.chosen, panel, years);
    placeval::ChartSpec chart;
    chart.title = config.treated_unit + ": actual vs counterfactual";
    chart.y_label = args.outcome_label;
    chart.vertical_marker_year = config.intervention_year;
    placeval::ChartSeries s_actual{"actual", {}};
    placeval::ChartSeries s_cf{"counterfactual", {}};
    for (std::size_t i = 0; i < years.size(); ++i) {
        s_actual.points[years[i]] = panel.value(years[i], config.treated_unit);
        s_cf.points[years[i]] = full_cf[i];
    }
    chart.series = {s_actual, s_cf};
    placeval::emit_svg_chart(chart, args.out_dir + "/counterfactual.svg");
    log_stage("wrote " + args.out_dir + "/{selection.json,effects.csv,counterfactual.svg}");

    std::cout << placeval::render_effects_table(effects, args.outcome_label);
    return kExitOk;
}

int run_placebo(const EvalArgs& args, int threads) {
    log_stage("loading panel " + args.panel_path);
    const auto panel = placeval::load_outcome_panel(args.panel_path, args.outcome_label);
    const auto config = build_config(args);
    const int placebo_year = args.intervention_year - args.offset;
    if (placebo_year - panel.years().front() + 1 < 4) {
        std::cerr << "error: placebo year " << placebo_year
                  << " leaves fewer than 4 pre-period years\n";
        return kExitMethod;
    }
    fs::create_directories(args.out_dir);

    log_stage("running placebo pipeline at " + std::to_string(placebo_year));
    const auto report = placeval::placebo_in_time(panel, config, placebo_year, threads);

    placeval::write_text_file(args.out_dir + "/placebo.json", placeval::placebo_json(report));
    placeval::write_text_file(args.out_dir + "/placebo_effects.csv",
                              placeval::effects_csv(report.effects));

    std::vector<int> overlap_years;
    std::vector<double> ov_actual, ov_orig, ov_placebo;
    for (const auto& pt : report.overlap_comparison) {
        overlap_years.push_back(pt.year);
        ov_actual.push_back(pt.actual);
        ov_orig.push_back(pt.original_cf);
        ov_placebo.push_back(pt.placebo_cf);
    }
    placeval::write_text_file(
        args.out_dir + "/placebo_paths.csv",
        placeval::placebo_paths_csv(overlap_years, ov_actual, ov_orig, ov_placebo));

    const auto years = all_years(panel);
    const auto full_cf = placeval::predict_counterfactual(report.selection.chosen, panel, years);
    placeval::ChartSpec chart;
    chart.title = config.treated_unit + ": placebo at " + std::to_string(placebo_year);
    chart.y_label = args.outcome_label;
    chart.vertical_marker_year = placebo_year;
    placeval::ChartSeries s_actual{"actual", {}};
    placeval::ChartSeries s_cf{"placebo counterfactual", {}};
    for (std::size_t i = 0; i < years.size(); ++i) {
        s_actual.points[years[i]] = panel.value(years[i], config.treated_unit);
        s_cf.points[years[i]] = full_cf[i];
    }
    chart.series = {s_actual, s_cf};
    placeval::emit_svg_chart(chart, args.out_dir + "/placebo.svg");
    log_stage("wrote " + args.out_dir +
              "/{placebo.json,placebo_effects.csv,placebo_paths.csv,placebo.svg}");

    std::cout << placeval::render_effects_table(report.effects, args.outcome_label);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regional efficiency scoring and counterfactual policy evaluation"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 1;
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");
    app.add_flag("--quiet", g_quiet, "suppress progress log lines");
    app.add_option("--threads", threads, "worker threads for DEA scoring and subset search")
        ->check(CLI::PositiveNumber);

    std::string dea_input, dea_out;
    auto* dea = app.add_subcommand("dea", "score super-efficiency for every unit-year");
    dea->add_option("--input", dea_input, "long-format dataset CSV")->required();
    dea->add_option("--out", dea_out, "output panel CSV")->required();

    EvalArgs eargs;
    auto add_eval_options = [&](CLI::App* sub, bool with_offset) {
        sub->add_option("--panel", eargs.panel_path, "outcome panel CSV")->required();
        sub->add_option("--treated", eargs.treated, "treated unit name");
        sub->add_option("--intervention-year", eargs.intervention_year,
                        "last pre-treatment year");
        sub->add_option("--exclude", eargs.exclude_csv, "comma-separated units to exclude");
        sub->add_option("--max-size", eargs.max_size, "cap on control-subset size");
        sub->add_option("--aic-variant", eargs.aic_variant,
                        "selection criterion: aicc (default) or aic");
        sub->add_option("--outcome-label", eargs.outcome_label, "label for tables and charts");
        sub->add_option("--out-dir", eargs.out_dir, "output directory")->required();
        if (with_offset)
            sub->add_option("--offset", eargs.offset,
                            "years to shift the intervention back (default 2)");
    };
    auto* evaluate = app.add_subcommand("evaluate", "counterfactual treatment-effect pipeline");
    add_eval_options(evaluate, false);
    auto* placebo = app.add_subcommand("placebo", "placebo-in-time robustness rerun");
    add_eval_options(placebo, true);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty() && sub != dea) apply_config_file(config_path, sub, eargs);
        if (sub != dea) {
            if (eargs.treated.empty())
                throw placeval::ArgumentError("--treated (or config treated_unit) is required");
            if (eargs.intervention_year == 0)
                throw placeval::ArgumentError(
                    "--intervention-year (or config intervention_year) is required");
        }
        if (sub == dea) return run_dea(dea_input, dea_out, threads);
        if (sub == evaluate) return run_evaluate(eargs, threads);
        return run_placebo(eargs, threads);
    } catch (const placeval::SelectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMethod;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
