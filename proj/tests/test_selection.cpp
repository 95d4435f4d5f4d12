#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "placeval/selection.hpp"

using namespace placeval;

namespace {

OutcomePanel make_panel(const std::vector<std::string>& units, int first_year,
                        const std::vector<std::vector<double>>& columns) {
    // columns[u][t] -> values[t][u]
    const std::size_t n_years = columns[0].size();
    std::vector<int> years;
    for (std::size_t t = 0; t < n_years; ++t) years.push_back(first_year + static_cast<int>(t));
    std::vector<std::vector<double>> values(n_years, std::vector<double>(units.size()));
    for (std::size_t u = 0; u < units.size(); ++u)
        for (std::size_t t = 0; t < n_years; ++t) values[t][u] = columns[u][t];
    return OutcomePanel(units, years, values, "outcome");
}

OutcomePanel random_panel(std::mt19937& rng, int n_candidates, int n_years) {
    std::uniform_real_distribution<double> val(0.3, 1.6);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<std::vector<double>> cols;
    std::vector<std::string> units = {"treated"};
    std::vector<double> treated(n_years, 0.0);
    cols.push_back(treated);
    for (int c = 0; c < n_candidates; ++c) {
        units.push_back("u" + std::to_string(c));
        std::vector<double> col(n_years);
        for (auto& v : col) v = val(rng);
        cols.push_back(col);
    }
    // treated is a noisy combination of the first three candidates
    for (int t = 0; t < n_years; ++t)
        cols[0][t] = 0.2 + 0.8 * cols[1][t] - 0.3 * cols[2][t] + 0.4 * cols[3][t] + noise(rng);
    return make_panel(units, 1995, cols);
}

EvaluationConfig basic_config(int intervention_year) {
    EvaluationConfig cfg;
    cfg.treated_unit = "treated";
    cfg.intervention_year = intervention_year;
    cfg.outcome_label = "outcome";
    return cfg;
}

// Single-pass enumeration over all subset sizes, scored exactly like the
// contract says: best R^2 within each size, then min AIC across sizes with
// smaller-size/lexicographic tie-breaks.
struct OracleResult {
    std::vector<std::string> chosen;
    double aic = 0.0;
    std::int64_t evaluated = 0;
};

OracleResult oracle_search(const OutcomePanel& panel, const EvaluationConfig& config) {
    const auto candidates = candidate_units(panel, config);
    const int pre_n = config.intervention_year - panel.years().front() + 1;
    int j_max = std::min(static_cast<int>(candidates.size()), pre_n - 3);
    if (config.max_subset_size) j_max = std::min(j_max, *config.max_subset_size);

    std::vector<double> y;
    const std::size_t ti = panel.unit_index(config.treated_unit);
    for (int t = 0; t < pre_n; ++t) y.push_back(panel.value_at(t, ti));

    OracleResult best;
    bool have_best = false;
    int best_size = 0;
    std::vector<int> best_subset_ids;

    for (int j = 1; j <= j_max; ++j) {
        double best_r2 = -1.0;
        std::vector<int> winner;
        OLSFit winner_fit;
        std::vector<int> idx(j);
        for (int k = 0; k < j; ++k) idx[k] = k;
        bool more = true;
        while (more) {
            ++best.evaluated;
            std::vector<std::vector<double>> cols;
            std::vector<std::string> labels;
            for (int c : idx) {
                const std::size_t ui = panel.unit_index(candidates[c]);
                std::vector<double> col;
                for (int t = 0; t < pre_n; ++t) col.push_back(panel.value_at(t, ui));
                cols.push_back(col);
                labels.push_back(candidates[c]);
            }
            try {
                auto fit = ols_fit(y, cols, labels, config.aic_variant);
                const bool better =
                    winner.empty() || fit.r_squared > best_r2 ||
                    (fit.r_squared == best_r2 &&
                     std::lexicographical_compare(idx.begin(), idx.end(), winner.begin(),
                                                  winner.end()));
                if (better) {
                    best_r2 = fit.r_squared;
                    winner = idx;
                    winner_fit = fit;
                }
            } catch (const RankError&) {
            }
            // next combination
            more = false;
            for (int pos = j - 1; pos >= 0; --pos) {
                if (idx[pos] < static_cast<int>(candidates.size()) - j + pos) {
                    ++idx[pos];
                    for (int k = pos + 1; k < j; ++k) idx[k] = idx[k - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
        if (winner.empty()) continue;
        bool take = !have_best;
        if (have_best) {
            if (winner_fit.aic != best.aic)
                take = winner_fit.aic < best.aic;
            else if (j != best_size)
                take = j < best_size;
            else
                take = std::lexicographical_compare(winner.begin(), winner.end(),
                                                    best_subset_ids.begin(),
                                                    best_subset_ids.end());
        }
        if (take) {
            best.chosen = winner_fit.control_units;
            best.aic = winner_fit.aic;
            best_size = j;
            best_subset_ids = winner;
            have_best = true;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("exact multiple of one candidate wins at size 1 with R^2 = 1") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> val(0.5, 1.5);
    std::vector<std::vector<double>> cols(4, std::vector<double>(10));
    for (auto& col : cols)
        for (auto& v : col) v = val(rng);
    for (int t = 0; t < 10; ++t) cols[0][t] = 2.0 * cols[3][t];  // treated = 2 * u2
    auto panel = make_panel({"treated", "u0", "u1", "u2"}, 2000, cols);

    auto fit = best_subset_of_size(panel, basic_config(2007), 1);
    CHECK(fit.control_units == std::vector<std::string>{"u2"});
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("combinatorics of the search space") {
    CHECK(binomial(19, 4) == 3876);
    std::int64_t total = 0;
    for (int j = 1; j <= 13; ++j) total += binomial(19, j);
    CHECK(total == 507623);
    CHECK(binomial(8, 0) == 1);
    CHECK(binomial(8, 9) == 0);
}

TEST_CASE("search space size accounted on a small panel") {
    std::mt19937 rng(9);
    auto panel = random_panel(rng, 6, 12);
    auto sel = select_control_group(panel, basic_config(2003));  // 9 pre years, J_max = 6
    std::int64_t expect = 0;
    for (int j = 1; j <= 6; ++j) expect += binomial(6, j);
    CHECK(sel.search_space_size == expect);
}

TEST_CASE("treated equal to one control chooses exactly that control") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> val(0.5, 1.5);
    std::vector<std::vector<double>> cols(5, std::vector<double>(12));
    for (auto& col : cols)
        for (auto& v : col) v = val(rng);
    cols[0] = cols[2];  // treated == u1
    auto panel = make_panel({"treated", "u0", "u1", "u2", "u3"}, 1998, cols);

    auto sel = select_control_group(panel, basic_config(2005));
    CHECK(sel.chosen.control_units == std::vector<std::string>{"u1"});
    // near-exact fit: rss collapses to rounding noise, AIC dominates all
    // real fits (the -inf sentinel itself needs a bitwise-zero rss)
    CHECK(sel.chosen.aic < -100.0);
    CHECK(sel.chosen.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matches the exhaustive single-pass oracle") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        auto panel = random_panel(rng, 6, 14);
        auto cfg = basic_config(2004);  // 10 pre years
        auto sel = select_control_group(panel, cfg);
        auto oracle = oracle_search(panel, cfg);
        CHECK(sel.chosen.control_units == oracle.chosen);
        CHECK(sel.chosen.aic == oracle.aic);
        CHECK(sel.search_space_size == oracle.evaluated);
    }
}

TEST_CASE("chosen AIC is minimal among per-size winners") {
    std::mt19937 rng(31);
    auto panel = random_panel(rng, 7, 14);
    auto sel = select_control_group(panel, basic_config(2004));
    for (const auto& [j, fit] : sel.per_size_winners) CHECK(sel.chosen.aic <= fit.aic);
}

TEST_CASE("winner R^2 never drops when the size grows") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 5; ++trial) {
        auto panel = random_panel(rng, 6, 15);
        auto sel = select_control_group(panel, basic_config(2005));
        double prev = -1.0;
        for (const auto& [j, fit] : sel.per_size_winners) {
            CHECK(fit.r_squared >= prev - 1e-12);
            prev = fit.r_squared;
        }
    }
}

TEST_CASE("affine rescaling of every candidate keeps the chosen subset") {
    std::mt19937 rng(50);
    auto panel = random_panel(rng, 6, 14);
    auto cfg = basic_config(2004);
    auto sel = select_control_group(panel, cfg);

    std::vector<std::vector<double>> cols;
    for (const auto& u : panel.unit_names()) {
        auto series = panel.unit_series(u);
        if (u != "treated")
            for (auto& v : series) v = -2.5 * v + 4.0;
        cols.push_back(series);
    }
    auto scaled = make_panel(panel.unit_names(), panel.years().front(), cols);
    auto sel2 = select_control_group(scaled, cfg);
    CHECK(sel2.chosen.control_units == sel.chosen.control_units);
}

TEST_CASE("parallel search equals sequential") {
    std::mt19937 rng(61);
    auto panel = random_panel(rng, 8, 16);
    auto cfg = basic_config(2006);
    auto seq = select_control_group(panel, cfg, 1);
    auto par = select_control_group(panel, cfg, 4);
    CHECK(seq.chosen.control_units == par.chosen.control_units);
    CHECK(seq.chosen.aic == par.chosen.aic);
    CHECK(seq.chosen.coefficients == par.chosen.coefficients);
    CHECK(seq.search_space_size == par.search_space_size);
    REQUIRE(seq.per_size_winners.size() == par.per_size_winners.size());
    for (const auto& [j, fit] : seq.per_size_winners)
        CHECK(par.per_size_winners.at(j).control_units == fit.control_units);
}

TEST_CASE("duplicate candidate columns are skipped, not fatal") {
    std::mt19937 rng(70);
    std::uniform_real_distribution<double> val(0.5, 1.5);
    std::vector<std::vector<double>> cols(4, std::vector<double>(10));
    for (auto& col : cols)
        for (auto& v : col) v = val(rng);
    cols[2] = cols[1];  // u0 == u1, any subset with both is rank deficient
    auto panel = make_panel({"treated", "u0", "u1", "u2"}, 2000, cols);

    auto sel = select_control_group(panel, basic_config(2006));
    CHECK(sel.rank_deficient_skipped > 0);
    CHECK(!sel.chosen.control_units.empty());
}

TEST_CASE("max_subset_size caps the search") {
    std::mt19937 rng(81);
    auto panel = random_panel(rng, 6, 14);
    auto cfg = basic_config(2004);
    cfg.max_subset_size = 2;
    auto sel = select_control_group(panel, cfg);
    CHECK(sel.per_size_winners.rbegin()->first <= 2);
    CHECK(sel.search_space_size == binomial(6, 1) + binomial(6, 2));
}

TEST_CASE("aicc variant is applied to the reported fits") {
    std::mt19937 rng(90);
    auto panel = random_panel(rng, 5, 14);
    auto cfg = basic_config(2004);
    cfg.aic_variant = AicVariant::Aicc;
    auto sel = select_control_group(panel, cfg);
    const auto& f = sel.chosen;
    const int k = static_cast<int>(f.control_units.size()) + 1;
    CHECK(f.aic == doctest::Approx(aicc_score(f.rss, f.n_obs, k)).epsilon(1e-12));
}

TEST_CASE("too few pre years raises ArgumentError") {
    std::mt19937 rng(95);
    auto panel = random_panel(rng, 4, 8);
    // intervention at index 2 -> 3 pre years: config valid, search refuses
    CHECK_THROWS_AS(select_control_group(panel, basic_config(1997)), ArgumentError);
}

TEST_CASE("subset size outside range raises ArgumentError") {
    std::mt19937 rng(97);
    auto panel = random_panel(rng, 4, 12);
    CHECK_THROWS_AS(best_subset_of_size(panel, basic_config(2002), 0), ArgumentError);
    CHECK_THROWS_AS(best_subset_of_size(panel, basic_config(2002), 9), ArgumentError);
}

TEST_CASE("predict with zero coefficients returns the intercept") {
    std::mt19937 rng(99);
    auto panel = random_panel(rng, 4, 10);
    OLSFit fit;
    fit.control_units = {"u0"};
    fit.coefficients = {0.0};
    fit.intercept = 3.25;
    auto path = predict_counterfactual(fit, panel, {1999, 2000, 2001});
    for (double v : path) CHECK(v == 3.25);
}

TEST_CASE("identity fit reproduces the control path") {
    std::mt19937 rng(101);
    auto panel = random_panel(rng, 4, 10);
    OLSFit fit;
    fit.control_units = {"u1"};
    fit.coefficients = {1.0};
    fit.intercept = 0.0;
    auto path = predict_counterfactual(fit, panel, panel.years());
    auto expect = panel.unit_series("u1");
    CHECK(path == expect);
}

TEST_CASE("prediction matches a hand dot product with published-style coefficients") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> val(8.0, 15.0);
    std::vector<std::vector<double>> cols(5, std::vector<double>(8));
    for (auto& col : cols)
        for (auto& v : col) v = val(rng);
    auto panel = make_panel({"treated", "c1", "c2", "c3", "c4"}, 2008, cols);

    OLSFit fit;
    fit.control_units = {"c1", "c2", "c3", "c4"};
    fit.intercept = -3.797078;
    fit.coefficients = {2.646954, -0.561032, -0.414065, -0.302354};
    auto path = predict_counterfactual(fit, panel, {2011, 2012});
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int year = 2011 + static_cast<int>(i);
        double expect = -3.797078;
        const char* names[] = {"c1", "c2", "c3", "c4"};
        for (int c = 0; c < 4; ++c)
            expect += fit.coefficients[c] * panel.value(year, names[c]);
        CHECK(path[i] == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("prediction for a missing year raises ArgumentError") {
    std::mt19937 rng(104);
    auto panel = random_panel(rng, 4, 10);
    OLSFit fit;
    fit.control_units = {"u0"};
    fit.coefficients = {1.0};
    CHECK_THROWS_AS(predict_counterfactual(fit, panel, {1890}), ArgumentError);
}

TEST_CASE("effects reproduce printed table rows") {
    auto s = treatment_effects({0.6415}, {0.4003}, {2011});
    CHECK(s.effect[0] == doctest::Approx(0.2412).epsilon(1e-12));

    auto g = treatment_effects({11.3}, {13.53}, {2011});
    CHECK(std::fabs(g.effect[0] - (-2.22923)) <= 5e-3);
}

TEST_CASE("published effect column mean") {
    std::vector<double> actual = {0.6415, 0.6383, 0.7987, 0.8542, 0.4627};
    std::vector<double> cf = {0.4003, 0.3969, 0.4949, 0.5263, 0.5264};
    auto s = treatment_effects(actual, cf, {2011, 2012, 2013, 2014, 2015});
    CHECK(std::fabs(s.mean_effect - 0.2101) <= 5e-4);
}

TEST_CASE("effect arithmetic is exact for same-scale values") {
    std::mt19937 rng(111);
    std::uniform_real_distribution<double> val(1.0, 1.99);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = val(rng), c = val(rng);
        auto s = treatment_effects({a}, {c}, {2000});
        CHECK(s.effect[0] + c == a);  // bitwise, difference of same-binade doubles is exact
    }
}

TEST_CASE("length mismatch raises ArgumentError") {
    CHECK_THROWS_AS(treatment_effects({1.0}, {1.0, 2.0}, {2000, 2001}), ArgumentError);
    CHECK_THROWS_AS(treatment_effects({}, {}, {}), ArgumentError);
}
