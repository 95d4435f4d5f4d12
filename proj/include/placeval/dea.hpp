#pragma once

#include <map>
#include <string>
#include <vector>

#include "placeval/panel.hpp"

namespace placeval {

/// Returns-to-scale class from the intensity-weight sum.
///
/// Mapping used here: sum(lambda) > 1 => Increasing, == 1 => Constant,
/// < 1 => Decreasing (tolerance 1e-6). Note that a good part of the DEA
/// literature maps sum(lambda) > 1 to *decreasing* returns; this library
/// follows the convention above throughout.
enum class RtsClass { Increasing, Constant, Decreasing };

/// Radial input-oriented efficiency of one unit in one year.
struct EfficiencyResult {
    double theta = 0.0;  // NaN when !feasible
    std::map<std::string, double> lambdas;  // reference units only
    std::vector<double> input_slacks;       // length m
    std::vector<double> output_slacks;      // length r
    double lambda_sum = 0.0;
    RtsClass rts_class = RtsClass::Constant;
    bool feasible = false;
};

/// Input-oriented CRS efficiency with the evaluated unit inside its own
/// reference set. theta is in (0, 1]; at least one unit per year scores 1.
EfficiencyResult ccr_efficiency(const DEADataset& data, int year, const std::string& unit);

/// Same model with the evaluated unit excluded from the reference set, so
/// efficient units can score above 1. Inefficient units keep their CCR
/// score. feasible=false (theta NaN) when the exclusion leaves no way to
/// cover the unit's outputs.
EfficiencyResult super_efficiency(const DEADataset& data, int year, const std::string& unit);

/// Super-efficiency score for every (year, unit), each year solved as an
/// independent cross-section. Infeasible cells become NaN flags in the
/// returned panel. `threads` > 1 splits cells across workers; the result is
/// identical regardless of thread count.
OutcomePanel efficiency_table(const DEADataset& data, int threads = 1);

/// Per-year max - min over units (NaN flags skipped).
std::map<int, double> yearly_range(const OutcomePanel& panel);

/// Fixed-width text table of a panel: 2-decimal cells, mean row, range
/// column, NaN flags printed as "INF".
std::string render_panel_table(const OutcomePanel& panel);

}  // namespace placeval
