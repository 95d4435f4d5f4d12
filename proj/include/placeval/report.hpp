#pragma once

#include <string>

#include "placeval/placebo.hpp"
#include "placeval/selection.hpp"

namespace placeval {

/// CSV with columns year,actual,counterfactual,effect (full precision).
std::string effects_csv(const TreatmentEffectSeries& effects);

/// CSV with columns year,actual,original_cf,placebo_cf over all panel years.
std::string placebo_paths_csv(const std::vector<int>& years, const std::vector<double>& actual,
                              const std::vector<double>& original_cf,
                              const std::vector<double>& placebo_cf);

/// JSON report of a control-group selection: chosen subset, intercept,
/// coefficients, R^2, AIC, std errors, t, p, per-size winners and search
/// diagnostics.
std::string selection_json(const ControlSelection& selection);

/// JSON report of a placebo rerun, including the per-year overlap table and
/// path-comparison statistics over the shared post years.
std::string placebo_json(const PlaceboReport& report);

/// Text table of post-year effects (2-decimal cells plus mean row).
std::string render_effects_table(const TreatmentEffectSeries& effects,
                                 const std::string& outcome_label);

/// Writes `content` to `path`; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace placeval
