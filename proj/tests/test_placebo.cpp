#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "placeval/placebo.hpp"

using namespace placeval;

namespace {

OutcomePanel make_panel(const std::vector<std::string>& units, int first_year,
                        const std::vector<std::vector<double>>& columns) {
    const std::size_t n_years = columns[0].size();
    std::vector<int> years;
    for (std::size_t t = 0; t < n_years; ++t) years.push_back(first_year + static_cast<int>(t));
    std::vector<std::vector<double>> values(n_years, std::vector<double>(units.size()));
    for (std::size_t u = 0; u < units.size(); ++u)
        for (std::size_t t = 0; t < n_years; ++t) values[t][u] = columns[u][t];
    return OutcomePanel(units, years, values, "outcome");
}

// treated follows a fixed combination of three controls, with `shift` added
// from break_year on (exclusive of earlier years)
OutcomePanel break_panel(std::mt19937& rng, int n_years, int first_year, int break_year,
                         double shift) {
    std::uniform_real_distribution<double> val(0.5, 1.5);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<std::vector<double>> cols(6, std::vector<double>(n_years));
    for (std::size_t u = 1; u < cols.size(); ++u)
        for (auto& v : cols[u]) v = val(rng);
    for (int t = 0; t < n_years; ++t) {
        cols[0][t] = 0.3 + 0.7 * cols[1][t] + 0.2 * cols[2][t] - 0.4 * cols[3][t] + noise(rng);
        if (first_year + t >= break_year) cols[0][t] += shift;
    }
    return make_panel({"treated", "u0", "u1", "u2", "u3", "u4"}, first_year, cols);
}

EvaluationConfig basic_config(int intervention_year) {
    EvaluationConfig cfg;
    cfg.treated_unit = "treated";
    cfg.intervention_year = intervention_year;
    cfg.outcome_label = "outcome";
    return cfg;
}

}  // namespace

TEST_CASE("compare_paths on identical vectors") {
    auto cmp = compare_paths({1.0, -2.0, 3.0}, {1.0, -2.0, 3.0}, {2000, 2001, 2002});
    CHECK(cmp.rmse == 0.0);
    CHECK(cmp.max_abs_gap == 0.0);
    CHECK(cmp.sign_agreement == 1.0);
}

TEST_CASE("compare_paths with a constant unit offset") {
    std::vector<double> b = {0.5, 1.5, -0.5, 2.0};
    std::vector<double> a = b;
    for (auto& v : a) v += 1.0;
    auto cmp = compare_paths(a, b, {2000, 2001, 2002, 2003});
    CHECK(cmp.rmse == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cmp.max_abs_gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sign agreement counts matching signs") {
    auto cmp = compare_paths({1.0, -1.0, 2.0, 0.0}, {2.0, 1.0, -1.0, 0.0},
                             {2000, 2001, 2002, 2003});
    CHECK(cmp.sign_agreement == doctest::Approx(0.5));
}

TEST_CASE("compare_paths length mismatch") {
    CHECK_THROWS_AS(compare_paths({1.0}, {1.0, 2.0}, {2000, 2001}), ArgumentError);
}

TEST_CASE("placebo at the intervention year reproduces the original pipeline") {
    std::mt19937 rng(8);
    auto panel = break_panel(rng, 14, 1995, 2006, 0.4);
    auto cfg = basic_config(2005);

    auto report = placebo_in_time(panel, cfg, 2005);
    auto sel = select_control_group(panel, cfg);
    std::vector<int> post;
    for (int y = 2006; y <= panel.years().back(); ++y) post.push_back(y);
    auto cf = predict_counterfactual(sel.chosen, panel, post);
    std::vector<double> actual;
    for (int y : post) actual.push_back(panel.value(y, "treated"));
    auto effects = treatment_effects(actual, cf, post);

    CHECK(report.selection.chosen.control_units == sel.chosen.control_units);
    CHECK(report.effects.effect == effects.effect);
    CHECK(report.effects.mean_effect == effects.mean_effect);
    for (const auto& pt : report.overlap_comparison) CHECK(pt.original_cf == pt.placebo_cf);
}

TEST_CASE("treated equal to one control gives zero placebo effects and rmse") {
    std::mt19937 rng(15);
    std::uniform_real_distribution<double> val(0.5, 1.5);
    std::vector<std::vector<double>> cols(4, std::vector<double>(12));
    for (auto& col : cols)
        for (auto& v : col) v = val(rng);
    cols[0] = cols[2];
    auto panel = make_panel({"treated", "u0", "u1", "u2"}, 1998, cols);

    auto report = placebo_in_time(panel, basic_config(2007), 2005);
    CHECK(report.pre_fit_rmse <= 1e-9);
    for (double e : report.effects.effect) CHECK(std::fabs(e) <= 1e-9);
}

TEST_CASE("controlled break: placebo counterfactual tracks actual until the true break") {
    std::mt19937 rng(23);
    const double shift = 0.5;
    // break takes effect in 2007 (true intervention year 2006)
    auto panel = break_panel(rng, 16, 1995, 2007, shift);
    auto cfg = basic_config(2006);

    auto report = placebo_in_time(panel, cfg, 2004);
    CHECK(report.placebo_year == 2004);
    CHECK(report.pre_fit_rmse < shift / 4.0);

    // placebo "post" years before the break carry no real effect
    for (std::size_t i = 0; i < report.effects.years.size(); ++i) {
        const int year = report.effects.years[i];
        if (year < 2007)
            CHECK(std::fabs(report.effects.effect[i]) < shift / 2.0);
        else
            CHECK(report.effects.effect[i] > shift / 2.0);
    }
}

TEST_CASE("overlap table covers exactly the original post years") {
    std::mt19937 rng(31);
    auto panel = break_panel(rng, 14, 1995, 2007, 0.3);
    auto report = placebo_in_time(panel, basic_config(2006), 2004);
    REQUIRE(report.overlap_comparison.size() == 2);  // 2007, 2008
    CHECK(report.overlap_comparison.front().year == 2007);
    CHECK(report.overlap_comparison.back().year == 2008);
    // placebo effects start right after the placebo year
    CHECK(report.effects.years.front() == 2005);
}

TEST_CASE("placebo effects keep the exact-difference invariant") {
    std::mt19937 rng(37);
    auto panel = break_panel(rng, 14, 1995, 2006, 0.3);
    auto report = placebo_in_time(panel, basic_config(2005), 2003);
    for (std::size_t i = 0; i < report.effects.effect.size(); ++i)
        CHECK(report.effects.effect[i] ==
              report.effects.actual[i] - report.effects.counterfactual[i]);
}

TEST_CASE("insufficient pre period raises ArgumentError") {
    std::mt19937 rng(41);
    auto panel = break_panel(rng, 12, 1995, 2004, 0.3);
    CHECK_THROWS_AS(placebo_in_time(panel, basic_config(2003), 1997), ArgumentError);
    CHECK_THROWS_AS(placebo_in_time(panel, basic_config(2003), 2004), ArgumentError);
}

TEST_CASE("placebo fit reports internally consistent t-values") {
    std::mt19937 rng(53);
    auto panel = break_panel(rng, 16, 1995, 2008, 0.4);
    auto report = placebo_in_time(panel, basic_config(2007), 2005);
    const auto& fit = report.selection.chosen;
    REQUIRE(!fit.coefficients.empty());
    for (std::size_t j = 0; j < fit.coefficients.size(); ++j) {
        if (fit.std_errors[j] <= 0.0) continue;
        CHECK(fit.t_values[j] == fit.coefficients[j] / fit.std_errors[j]);
    }
}

TEST_CASE("placebo rerun is deterministic") {
    std::mt19937 rng(47);
    auto panel = break_panel(rng, 14, 1995, 2006, 0.3);
    auto a = placebo_in_time(panel, basic_config(2005), 2003);
    auto b = placebo_in_time(panel, basic_config(2005), 2003);
    CHECK(a.effects.effect == b.effects.effect);
    CHECK(a.pre_fit_rmse == b.pre_fit_rmse);
    CHECK(a.selection.chosen.control_units == b.selection.chosen.control_units);
}
