#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "placeval/errors.hpp"

namespace placeval {

/// Rectangular year-by-unit matrix of one outcome variable.
///
/// Years are consecutive integers, unit names are unique and the matrix is
/// complete. A cell may hold NaN only as an "infeasible" flag written by the
/// DEA scorer (rendered as "INF" in files and tables); loaders never produce
/// NaN from blank cells. Immutable after construction.
class OutcomePanel {
public:
    OutcomePanel(std::vector<std::string> unit_names, std::vector<int> years,
                 std::vector<std::vector<double>> values, std::string outcome_label);

    const std::vector<std::string>& unit_names() const { return unit_names_; }
    const std::vector<int>& years() const { return years_; }
    const std::vector<std::vector<double>>& values() const { return values_; }
    const std::string& outcome_label() const { return outcome_label_; }

    std::size_t n_units() const { return unit_names_.size(); }
    std::size_t n_years() const { return years_.size(); }

    /// Index of `unit`; throws ArgumentError if absent.
    std::size_t unit_index(const std::string& unit) const;
    /// Index of `year`; throws ArgumentError if absent.
    std::size_t year_index(int year) const;
    bool has_unit(const std::string& unit) const;
    bool has_year(int year) const;

    double value(int year, const std::string& unit) const;
    double value_at(std::size_t year_idx, std::size_t unit_idx) const {
        return values_[year_idx][unit_idx];
    }

    /// Column of one unit across all years, in year order.
    std::vector<double> unit_series(const std::string& unit) const;

    /// (year, unit) pairs whose cell is NaN (infeasible DEA scores).
    std::vector<std::pair<int, std::string>> flagged_cells() const;

private:
    std::vector<std::string> unit_names_;
    std::vector<int> years_;
    std::vector<std::vector<double>> values_;  // [year][unit]
    std::string outcome_label_;
};

/// Per-year, per-unit input/output vectors for efficiency scoring.
///
/// All values strictly positive; the same units appear in every year.
/// Immutable after construction.
class DEADataset {
public:
    DEADataset(std::vector<std::string> unit_names, std::vector<int> years,
               std::vector<std::string> input_labels, std::vector<std::string> output_labels,
               std::vector<std::vector<std::vector<double>>> inputs,
               std::vector<std::vector<std::vector<double>>> outputs);

    const std::vector<std::string>& unit_names() const { return unit_names_; }
    const std::vector<int>& years() const { return years_; }
    const std::vector<std::string>& input_labels() const { return input_labels_; }
    const std::vector<std::string>& output_labels() const { return output_labels_; }

    std::size_t n_units() const { return unit_names_.size(); }
    std::size_t n_years() const { return years_.size(); }
    std::size_t n_inputs() const { return input_labels_.size(); }
    std::size_t n_outputs() const { return output_labels_.size(); }

    std::size_t unit_index(const std::string& unit) const;
    std::size_t year_index(int year) const;

    /// Input vector (length m) of one unit in one year.
    const std::vector<double>& inputs_of(std::size_t year_idx, std::size_t unit_idx) const {
        return inputs_[year_idx][unit_idx];
    }
    const std::vector<double>& outputs_of(std::size_t year_idx, std::size_t unit_idx) const {
        return outputs_[year_idx][unit_idx];
    }

private:
    std::vector<std::string> unit_names_;
    std::vector<int> years_;
    std::vector<std::string> input_labels_;
    std::vector<std::string> output_labels_;
    std::vector<std::vector<std::vector<double>>> inputs_;   // [year][unit][i]
    std::vector<std::vector<std::vector<double>>> outputs_;  // [year][unit][k]
};

enum class AicVariant { Aic, Aicc };

/// Settings for a counterfactual evaluation run.
///
/// The default selection criterion is the small-sample corrected AICc: with
/// pre periods as short as 16 years the uncorrected form always prefers the
/// largest admissible subset, which saturates the fit. Plain AIC stays
/// available behind `aic_variant`.
struct EvaluationConfig {
    std::string treated_unit;
    int intervention_year = 0;  // last pre-treatment year
    std::string outcome_label;
    std::vector<std::string> excluded_units;
    std::optional<int> max_subset_size;
    AicVariant aic_variant = AicVariant::Aicc;

    /// Throws ValidationError/ArgumentError unless the config is usable with
    /// `panel`: treated unit present and not excluded, intervention year
    /// strictly inside the panel range with >= 3 pre years and >= 1 post year.
    void validate(const OutcomePanel& panel) const;
};

/// Reads a wide-format outcome CSV: header `year,<unit>,...`, one row per
/// year. "INF" cells load as NaN flags.
OutcomePanel load_outcome_panel(const std::string& path, const std::string& outcome_label);

/// Writes the canonical wide-format CSV (shortest round-trip float text,
/// NaN cells as "INF"). load/write round-trips cell-for-cell.
void write_outcome_panel(const OutcomePanel& panel, const std::string& path);
std::string outcome_panel_csv(const OutcomePanel& panel);

/// Reads a long-format efficiency-data CSV: header
/// `year,unit,in:<name>,...,out:<name>,...`, one row per (year, unit).
DEADataset load_dea_dataset(const std::string& path);

/// Bundled efficiency panel: 20 Yangtze-delta cities, 1995-2015, scores as
/// published (2 decimals). Ships with the repo at data/table1_efficiency.csv.
OutcomePanel bundled_table1();

/// Printed column means of the bundled table (one per unit, unit order).
const std::map<std::string, double>& bundled_table1_printed_means();

/// Printed per-year ranges (max - min) of the bundled table.
const std::map<int, double>& bundled_table1_printed_ranges();

}  // namespace placeval
