#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "placeval/ols.hpp"
#include "placeval/panel.hpp"

namespace placeval {

/// Result of the exhaustive control-group search.
struct ControlSelection {
    std::map<int, OLSFit> per_size_winners;  // j -> best-R^2 fit of size j
    OLSFit chosen;                           // min-AIC winner across sizes
    std::int64_t search_space_size = 0;      // subsets enumerated
    std::int64_t rank_deficient_skipped = 0;
};

/// Post-treatment outcome path versus its counterfactual.
struct TreatmentEffectSeries {
    std::vector<int> years;
    std::vector<double> actual;
    std::vector<double> counterfactual;
    std::vector<double> effect;  // actual - counterfactual, elementwise
    double mean_effect = 0.0;
};

/// Best fit of exactly `j` controls: evaluates every j-subset of the
/// candidates (all units minus treated and excluded) on pre-period data
/// (years <= intervention_year) and returns the max-R^2 fit. Ties resolve
/// to the lexicographically smallest subset in candidate order.
/// Rank-deficient subsets are skipped.
OLSFit best_subset_of_size(const OutcomePanel& panel, const EvaluationConfig& config, int j);

/// Full search: per-size winners for j = 1..J_max (J_max = min(candidates,
/// n_obs - 3, max_subset_size)), then the minimum-AIC winner across sizes.
/// AIC ties prefer the smaller subset, then lexicographic order.
/// `threads` > 1 shards the enumeration; the result is identical for any
/// thread count. Requires >= 4 pre-period years.
ControlSelection select_control_group(const OutcomePanel& panel, const EvaluationConfig& config,
                                      int threads = 1);

/// intercept + sum(coef_i * control_i(t)) for each requested year.
std::vector<double> predict_counterfactual(const OLSFit& fit, const OutcomePanel& panel,
                                           const std::vector<int>& years);

/// Elementwise actual - counterfactual and its arithmetic mean.
TreatmentEffectSeries treatment_effects(const std::vector<double>& actual,
                                        const std::vector<double>& counterfactual,
                                        const std::vector<int>& years);

/// Candidate units for a config: panel order minus treated and excluded.
std::vector<std::string> candidate_units(const OutcomePanel& panel,
                                         const EvaluationConfig& config);

/// Number of j-element subsets of n (saturates at int64 max).
std::int64_t binomial(int n, int j);

}  // namespace placeval
