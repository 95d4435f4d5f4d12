#include "placeval/selection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/Dense>

#include "lsq_core.hpp"

namespace placeval {
namespace {

// One evaluated subset: R^2 ranking key plus the index vector.
struct SubsetScore {
    double r_squared = -std::numeric_limits<double>::infinity();
    std::vector<int> subset;
    bool valid = false;
};

// Strict total order: higher R^2 wins, exact ties go to the
// lexicographically smaller subset. Total ordering makes the scan result
// independent of enumeration order and of sharding.
bool beats(const SubsetScore& a, const SubsetScore& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    if (a.r_squared != b.r_squared) return a.r_squared > b.r_squared;
    return std::lexicographical_compare(a.subset.begin(), a.subset.end(), b.subset.begin(),
                                        b.subset.end());
}

// Advances a sorted index combination to its lexicographic successor.
bool next_combination(std::vector<int>& idx, int n) {
    const int j = static_cast<int>(idx.size());
    for (int pos = j - 1; pos >= 0; --pos) {
        if (idx[pos] < n - j + pos) {
            ++idx[pos];
            for (int k = pos + 1; k < j; ++k) idx[k] = idx[k - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SearchContext {
    std::vector<std::string> candidates;
    Eigen::MatrixXd x_pre;  // pre-period columns, one per candidate
    Eigen::VectorXd y_pre;
    double tss = 0.0;
    int n_obs = 0;
    int j_max = 0;
};

SearchContext build_context(const OutcomePanel& panel, const EvaluationConfig& config) {
    config.validate(panel);
    SearchContext ctx;
    ctx.candidates = candidate_units(panel, config);
    if (ctx.candidates.empty()) throw SelectionError("no candidate control units");

    const int pre_n = config.intervention_year - panel.years().front() + 1;
    if (pre_n < 4) throw ArgumentError("need at least 4 pre-period years");
    ctx.n_obs = pre_n;

    const std::size_t treated = panel.unit_index(config.treated_unit);
    ctx.y_pre.resize(pre_n);
    for (int t = 0; t < pre_n; ++t) ctx.y_pre[t] = panel.value_at(t, treated);
    ctx.x_pre.resize(pre_n, static_cast<int>(ctx.candidates.size()));
    for (std::size_t c = 0; c < ctx.candidates.size(); ++c) {
        const std::size_t u = panel.unit_index(ctx.candidates[c]);
        for (int t = 0; t < pre_n; ++t) ctx.x_pre(t, static_cast<int>(c)) = panel.value_at(t, u);
    }
    ctx.tss = (ctx.y_pre.array() - ctx.y_pre.mean()).square().sum();

    ctx.j_max = std::min(static_cast<int>(ctx.candidates.size()), pre_n - 3);
    if (config.max_subset_size) ctx.j_max = std::min(ctx.j_max, *config.max_subset_size);
    return ctx;
}

// Scans every j-subset of the candidates; `stride`/`offset` shard the
// enumeration for parallel workers.
void scan_size(const SearchContext& ctx, int j, std::int64_t offset, std::int64_t stride,
               SubsetScore& best, std::int64_t& rank_skipped) {
    std::vector<int> idx(j);
    for (int k = 0; k < j; ++k) idx[k] = k;

    Eigen::MatrixXd design(ctx.n_obs, j + 1);
    design.col(0).setOnes();
    std::int64_t ordinal = 0;
    do {
        if (ordinal++ % stride != offset) continue;
        for (int k = 0; k < j; ++k) design.col(k + 1) = ctx.x_pre.col(idx[k]);
        const auto ls = detail::solve_least_squares(design, ctx.y_pre);
        if (!ls.full_rank) {
            ++rank_skipped;
            continue;
        }
        SubsetScore score;
        score.valid = true;
        score.r_squared = detail::r_squared_from(ls.rss, ctx.tss);
        score.subset = idx;
        if (beats(score, best)) best = std::move(score);
    } while (next_combination(idx, static_cast<int>(ctx.candidates.size())));
}

struct SizeResult {
    SubsetScore best;
    std::int64_t evaluated = 0;
    std::int64_t rank_skipped = 0;
};

SizeResult search_size(const SearchContext& ctx, int j, int threads) {
    SizeResult result;
    result.evaluated = binomial(static_cast<int>(ctx.candidates.size()), j);
    const int nw = std::max(1, threads);
    if (nw == 1) {
        scan_size(ctx, j, 0, 1, result.best, result.rank_skipped);
        return result;
    }
    std::vector<SubsetScore> bests(nw);
    std::vector<std::int64_t> skips(nw, 0);
    std::vector<std::thread> workers;
    workers.reserve(nw);
    for (int w = 0; w < nw; ++w)
        workers.emplace_back(
            [&ctx, j, w, nw, &bests, &skips] { scan_size(ctx, j, w, nw, bests[w], skips[w]); });
    for (auto& t : workers) t.join();
    for (int w = 0; w < nw; ++w) {
        if (beats(bests[w], result.best)) result.best = bests[w];
        result.rank_skipped += skips[w];
    }
    return result;
}

OLSFit full_fit(const SearchContext& ctx, const std::vector<int>& subset, AicVariant variant) {
    std::vector<std::vector<double>> cols;
    std::vector<std::string> labels;
    cols.reserve(subset.size());
    labels.reserve(subset.size());
    for (int c : subset) {
        cols.emplace_back(ctx.x_pre.col(c).data(), ctx.x_pre.col(c).data() + ctx.n_obs);
        labels.push_back(ctx.candidates[c]);
    }
    std::vector<double> y(ctx.y_pre.data(), ctx.y_pre.data() + ctx.n_obs);
    return ols_fit(y, cols, labels, variant);
}

}  // namespace

std::vector<std::string> candidate_units(const OutcomePanel& panel,
                                         const EvaluationConfig& config) {
    std::vector<std::string> out;
    for (const auto& u : panel.unit_names()) {
        if (u == config.treated_unit) continue;
        if (std::find(config.excluded_units.begin(), config.excluded_units.end(), u) !=
            config.excluded_units.end())
            continue;
        out.push_back(u);
    }
    return out;
}

std::int64_t binomial(int n, int j) {
    if (j < 0 || j > n) return 0;
    j = std::min(j, n - j);
    unsigned __int128 r = 1;
    for (int i = 1; i <= j; ++i) {
        r = r * static_cast<unsigned __int128>(n - j + i) / static_cast<unsigned __int128>(i);
        if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(r);
}

OLSFit best_subset_of_size(const OutcomePanel& panel, const EvaluationConfig& config, int j) {
    const auto ctx = build_context(panel, config);
    if (j < 1 || j > ctx.j_max)
        throw ArgumentError("subset size " + std::to_string(j) + " outside 1.." +
                            std::to_string(ctx.j_max));
    const auto res = search_size(ctx, j, 1);
    if (!res.best.valid)
        throw SelectionError("all size-" + std::to_string(j) + " subsets are rank deficient");
    return full_fit(ctx, res.best.subset, config.aic_variant);
}

ControlSelection select_control_group(const OutcomePanel& panel, const EvaluationConfig& config,
                                      int threads) {
    const auto ctx = build_context(panel, config);

    ControlSelection sel;
    std::vector<std::pair<int, std::vector<int>>> winners;  // (j, subset)
    for (int j = 1; j <= ctx.j_max; ++j) {
        const auto res = search_size(ctx, j, threads);
        sel.search_space_size += res.evaluated;
        sel.rank_deficient_skipped += res.rank_skipped;
        if (res.best.valid) winners.emplace_back(j, res.best.subset);
    }
    if (winners.empty()) throw SelectionError("no full-rank control subset found");

    bool have_chosen = false;
    std::pair<int, std::vector<int>> chosen_key;
    for (const auto& [j, subset] : winners) {
        OLSFit fit = full_fit(ctx, subset, config.aic_variant);
        // min AIC; exact ties prefer the smaller subset, then lexicographic
        bool take = false;
        if (!have_chosen) {
            take = true;
        } else if (fit.aic != sel.chosen.aic) {
            take = fit.aic < sel.chosen.aic;
        } else if (j != chosen_key.first) {
            take = j < chosen_key.first;
        } else {
            take = std::lexicographical_compare(subset.begin(), subset.end(),
                                                chosen_key.second.begin(),
                                                chosen_key.second.end());
        }
        if (take) {
            sel.chosen = fit;
            chosen_key = {j, subset};
            have_chosen = true;
        }
        sel.per_size_winners.emplace(j, std::move(fit));
    }
    return sel;
}

std::vector<double> predict_counterfactual(const OLSFit& fit, const OutcomePanel& panel,
                                           const std::vector<int>& years) {
    std::vector<std::size_t> unit_idx;
    unit_idx.reserve(fit.control_units.size());
    for (const auto& u : fit.control_units) unit_idx.push_back(panel.unit_index(u));

    std::vector<double> out;
    out.reserve(years.size());
    for (int year : years) {
        const std::size_t yi = panel.year_index(year);
        double v = fit.intercept;
        for (std::size_t c = 0; c < unit_idx.size(); ++c)
            v += fit.coefficients[c] * panel.value_at(yi, unit_idx[c]);
        out.push_back(v);
    }
    return out;
}

TreatmentEffectSeries treatment_effects(const std::vector<double>& actual,
                                        const std::vector<double>& counterfactual,
                                        const std::vector<int>& years) {
    if (actual.size() != counterfactual.size() || actual.size() != years.size())
        throw ArgumentError("actual/counterfactual/years lengths differ");
    if (actual.empty()) throw ArgumentError("series must be nonempty");

    TreatmentEffectSeries s;
    s.years = years;
    s.actual = actual;
    s.counterfactual = counterfactual;
    s.effect.resize(actual.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        s.effect[i] = actual[i] - counterfactual[i];
        sum += s.effect[i];
    }
    s.mean_effect = sum / static_cast<double>(actual.size());
    return s;
}

}  // namespace placeval
