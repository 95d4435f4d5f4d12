#pragma once

#include <vector>

#include "placeval/selection.hpp"

namespace placeval {

/// One shared post-intervention year in the placebo comparison.
struct OverlapPoint {
    int year = 0;
    double actual = 0.0;
    double original_cf = 0.0;
    double placebo_cf = 0.0;
};

/// Output of a placebo-in-time rerun.
struct PlaceboReport {
    int placebo_year = 0;
    ControlSelection selection;   // search rerun with T1 = placebo_year
    double pre_fit_rmse = 0.0;    // in-sample, years <= placebo_year
    TreatmentEffectSeries effects;  // placebo post years
    std::vector<OverlapPoint> overlap_comparison;  // original post years
};

/// Similarity statistics between two equal-length paths.
struct PathComparison {
    double rmse = 0.0;
    double max_abs_gap = 0.0;
    double sign_agreement = 0.0;  // fraction of positions with equal sign
};

/// Reruns the full selection/prediction pipeline with the intervention
/// moved to `placebo_year` (<= the configured year; equality reproduces the
/// original run) and compares both counterfactual paths on the original
/// post years. Requires >= 4 pre years at the placebo date (ArgumentError).
PlaceboReport placebo_in_time(const OutcomePanel& panel, const EvaluationConfig& config,
                              int placebo_year, int threads = 1);

/// rmse / max gap of a - b plus the fraction of positions where a and b
/// have the same sign. Throws ArgumentError on length mismatch.
PathComparison compare_paths(const std::vector<double>& a, const std::vector<double>& b,
                             const std::vector<int>& years);

}  // namespace placeval
