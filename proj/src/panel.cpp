#include "placeval/panel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace placeval {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_double(const std::string& tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    // from_chars accepts "inf"/"nan" spellings; only finite data is valid here
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_int(const std::string& tok, int& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool is_inf_token(const std::string& tok) {
    if (tok.size() != 3) return false;
    auto low = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
    return low(tok[0]) == 'i' && low(tok[1]) == 'n' && low(tok[2]) == 'f';
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

std::string format_value(double v) {
    if (std::isnan(v)) return "INF";
    return fmt::format("{}", v);
}

}  // namespace

OutcomePanel::OutcomePanel(std::vector<std::string> unit_names, std::vector<int> years,
                           std::vector<std::vector<double>> values, std::string outcome_label)
    : unit_names_(std::move(unit_names)),
      years_(std::move(years)),
      values_(std::move(values)),
      outcome_label_(std::move(outcome_label)) {
    if (unit_names_.empty()) throw ValidationError("panel has no units");
    if (years_.empty()) throw ValidationError("panel has no years");
    std::set<std::string> seen;
    for (const auto& u : unit_names_) {
        if (u.empty()) throw ValidationError("empty unit name");
        if (!seen.insert(u).second) throw ValidationError("duplicate unit name: " + u);
    }
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] != years_[i - 1] + 1)
            throw ValidationError("years must be consecutive, got " + std::to_string(years_[i - 1]) +
                                  " then " + std::to_string(years_[i]));
    }
    if (values_.size() != years_.size()) throw ValidationError("row count != year count");
    for (std::size_t y = 0; y < values_.size(); ++y) {
        if (values_[y].size() != unit_names_.size())
            throw ValidationError("incomplete row", years_[y], "");
    }
}

std::size_t OutcomePanel::unit_index(const std::string& unit) const {
    auto it = std::find(unit_names_.begin(), unit_names_.end(), unit);
    if (it == unit_names_.end()) throw ArgumentError("unknown unit: " + unit);
    return static_cast<std::size_t>(it - unit_names_.begin());
}

std::size_t OutcomePanel::year_index(int year) const {
    if (!has_year(year)) throw ArgumentError("year out of range: " + std::to_string(year));
    return static_cast<std::size_t>(year - years_.front());
}

bool OutcomePanel::has_unit(const std::string& unit) const {
    return std::find(unit_names_.begin(), unit_names_.end(), unit) != unit_names_.end();
}

bool OutcomePanel::has_year(int year) const {
    return year >= years_.front() && year <= years_.back();
}

double OutcomePanel::value(int year, const std::string& unit) const {
    return values_[year_index(year)][unit_index(unit)];
}

std::vector<double> OutcomePanel::unit_series(const std::string& unit) const {
    std::size_t u = unit_index(unit);
    std::vector<double> out;
    out.reserve(years_.size());
    for (const auto& row : values_) out.push_back(row[u]);
    return out;
}

std::vector<std::pair<int, std::string>> OutcomePanel::flagged_cells() const {
    std::vector<std::pair<int, std::string>> out;
    for (std::size_t y = 0; y < years_.size(); ++y)
        for (std::size_t u = 0; u < unit_names_.size(); ++u)
            if (std::isnan(values_[y][u])) out.emplace_back(years_[y], unit_names_[u]);
    return out;
}

DEADataset::DEADataset(std::vector<std::string> unit_names, std::vector<int> years,
                       std::vector<std::string> input_labels,
                       std::vector<std::string> output_labels,
                       std::vector<std::vector<std::vector<double>>> inputs,
                       std::vector<std::vector<std::vector<double>>> outputs)
    : unit_names_(std::move(unit_names)),
      years_(std::move(years)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
    if (input_labels_.empty()) throw ValidationError("need at least one input");
    if (output_labels_.empty()) throw ValidationError("need at least one output");
    if (unit_names_.size() < 2) throw ValidationError("need at least two units per year");
    std::set<std::string> seen(unit_names_.begin(), unit_names_.end());
    if (seen.size() != unit_names_.size()) throw ValidationError("duplicate unit name");
    if (inputs_.size() != years_.size() || outputs_.size() != years_.size())
        throw ValidationError("year dimension mismatch");
    for (std::size_t y = 0; y < years_.size(); ++y) {
        if (inputs_[y].size() != unit_names_.size() || outputs_[y].size() != unit_names_.size())
            throw ValidationError("unit dimension mismatch", years_[y], "");
        for (std::size_t u = 0; u < unit_names_.size(); ++u) {
            if (inputs_[y][u].size() != input_labels_.size() ||
                outputs_[y][u].size() != output_labels_.size())
                throw ValidationError("vector length mismatch", years_[y], unit_names_[u]);
            for (std::size_t i = 0; i < input_labels_.size(); ++i)
                if (!(inputs_[y][u][i] > 0.0))
                    throw DomainError("input must be strictly positive", years_[y], unit_names_[u],
                                      input_labels_[i]);
            for (std::size_t k = 0; k < output_labels_.size(); ++k)
                if (!(outputs_[y][u][k] > 0.0))
                    throw DomainError("output must be strictly positive", years_[y],
                                      unit_names_[u], output_labels_[k]);
        }
    }
}

std::size_t DEADataset::unit_index(const std::string& unit) const {
    auto it = std::find(unit_names_.begin(), unit_names_.end(), unit);
    if (it == unit_names_.end()) throw ArgumentError("unknown unit: " + unit);
    return static_cast<std::size_t>(it - unit_names_.begin());
}

std::size_t DEADataset::year_index(int year) const {
    auto it = std::find(years_.begin(), years_.end(), year);
    if (it == years_.end()) throw ArgumentError("unknown year: " + std::to_string(year));
    return static_cast<std::size_t>(it - years_.begin());
}

void EvaluationConfig::validate(const OutcomePanel& panel) const {
    if (!panel.has_unit(treated_unit))
        throw ValidationError("treated unit not in panel: " + treated_unit);
    for (const auto& u : excluded_units) {
        if (u == treated_unit)
            throw ValidationError("treated unit cannot be excluded: " + treated_unit);
    }
    const auto& years = panel.years();
    if (intervention_year < years.front() + 2)
        throw ValidationError("need at least 3 pre-treatment years before " +
                              std::to_string(intervention_year + 1));
    if (intervention_year >= years.back())
        throw ValidationError("need at least 1 post-treatment year after " +
                              std::to_string(intervention_year));
    if (max_subset_size && *max_subset_size < 1)
        throw ValidationError("max_subset_size must be >= 1");
}

OutcomePanel load_outcome_panel(const std::string& path, const std::string& outcome_label) {
    auto lines = read_lines(path);
    if (lines.size() < 2) throw ParseError("panel file needs a header and at least one row", 1, 1);
    auto header = split_csv_line(lines[0]);
    if (header.size() < 2 || header[0] != "year")
        throw ParseError("header must start with 'year' and name at least one unit", 1, 1);
    std::vector<std::string> units(header.begin() + 1, header.end());
    {
        std::set<std::string> seen;
        for (const auto& u : units)
            if (u.empty() || !seen.insert(u).second)
                throw ValidationError("duplicate or empty unit name in header: " + u);
    }

    std::vector<int> years;
    std::vector<std::vector<double>> values;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto toks = split_csv_line(lines[li]);
        int row = static_cast<int>(li + 1);
        if (toks.empty() || toks[0].empty()) throw ParseError("missing year", row, 1);
        int year;
        if (!parse_int(toks[0], year)) throw ParseError("non-numeric year: " + toks[0], row, 1);
        std::vector<double> rowvals(units.size());
        for (std::size_t u = 0; u < units.size(); ++u) {
            if (u + 1 >= toks.size() || toks[u + 1].empty())
                throw ValidationError("missing cell", year, units[u]);
            if (is_inf_token(toks[u + 1])) {
                rowvals[u] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            double v;
            if (!parse_double(toks[u + 1], v))
                throw ParseError("non-numeric cell: " + toks[u + 1], row, static_cast<int>(u + 2));
            rowvals[u] = v;
        }
        if (toks.size() > units.size() + 1)
            throw ParseError("row has more cells than header", row,
                             static_cast<int>(units.size() + 2));
        years.push_back(year);
        values.push_back(std::move(rowvals));
    }
    return OutcomePanel(std::move(units), std::move(years), std::move(values), outcome_label);
}

std::string outcome_panel_csv(const OutcomePanel& panel) {
    std::string out = "year";
    for (const auto& u : panel.unit_names()) out += "," + u;
    out += "\n";
    for (std::size_t y = 0; y < panel.n_years(); ++y) {
        out += std::to_string(panel.years()[y]);
        for (std::size_t u = 0; u < panel.n_units(); ++u)
            out += "," + format_value(panel.value_at(y, u));
        out += "\n";
    }
    return out;
}

void write_outcome_panel(const OutcomePanel& panel, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << outcome_panel_csv(panel);
    if (!out) throw IoError("write failed: " + path);
}

DEADataset load_dea_dataset(const std::string& path) {
    auto lines = read_lines(path);
    if (lines.size() < 2) throw ParseError("dataset needs a header and at least one row", 1, 1);
    auto header = split_csv_line(lines[0]);
    if (header.size() < 4 || header[0] != "year" || header[1] != "unit")
        throw ParseError("header must be year,unit,in:...,out:...", 1, 1);

    std::vector<std::string> input_labels, output_labels;
    bool seen_out = false;
    for (std::size_t c = 2; c < header.size(); ++c) {
        const auto& h = header[c];
        if (h.rfind("in:", 0) == 0) {
            if (seen_out)
                throw ParseError("input column after output column", 1, static_cast<int>(c + 1));
            input_labels.push_back(h.substr(3));
        } else if (h.rfind("out:", 0) == 0) {
            seen_out = true;
            output_labels.push_back(h.substr(4));
        } else {
            throw ParseError("column must be prefixed in: or out:, got " + h, 1,
                             static_cast<int>(c + 1));
        }
    }
    if (input_labels.empty() || output_labels.empty())
        throw ParseError("need at least one in: and one out: column", 1, 1);
    const std::size_t m = input_labels.size(), r = output_labels.size();

    // (year, unit) -> row values, preserving first-appearance orders
    std::vector<int> years;
    std::vector<std::string> units;
    std::map<std::pair<int, std::string>, std::pair<std::vector<double>, std::vector<double>>> cells;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto toks = split_csv_line(lines[li]);
        int row = static_cast<int>(li + 1);
        if (toks.size() != 2 + m + r)
            throw ParseError("expected " + std::to_string(2 + m + r) + " cells, got " +
                                 std::to_string(toks.size()),
                             row, 1);
        int year;
        if (!parse_int(toks[0], year)) throw ParseError("non-numeric year: " + toks[0], row, 1);
        const std::string& unit = toks[1];
        if (unit.empty()) throw ParseError("empty unit name", row, 2);

        std::vector<double> ins(m), outs(r);
        for (std::size_t i = 0; i < m; ++i) {
            if (!parse_double(toks[2 + i], ins[i]))
                throw ParseError("non-numeric cell: " + toks[2 + i], row, static_cast<int>(3 + i));
            if (!(ins[i] > 0.0))
                throw DomainError("input must be strictly positive", year, unit,
                                  input_labels[i]);
        }
        for (std::size_t k = 0; k < r; ++k) {
            if (!parse_double(toks[2 + m + k], outs[k]))
                throw ParseError("non-numeric cell: " + toks[2 + m + k], row,
                                 static_cast<int>(3 + m + k));
            if (!(outs[k] > 0.0))
                throw DomainError("output must be strictly positive", year, unit,
                                  output_labels[k]);
        }
        if (std::find(years.begin(), years.end(), year) == years.end()) years.push_back(year);
        if (std::find(units.begin(), units.end(), unit) == units.end()) units.push_back(unit);
        if (!cells.emplace(std::make_pair(year, unit), std::make_pair(std::move(ins), std::move(outs)))
                 .second)
            throw ValidationError("duplicate row", year, unit);
    }

    std::sort(years.begin(), years.end());
    std::vector<std::vector<std::vector<double>>> inputs(years.size()), outputs(years.size());
    for (std::size_t y = 0; y < years.size(); ++y) {
        inputs[y].resize(units.size());
        outputs[y].resize(units.size());
        for (std::size_t u = 0; u < units.size(); ++u) {
            auto it = cells.find({years[y], units[u]});
            if (it == cells.end())
                throw ValidationError("missing row", years[y], units[u]);
            inputs[y][u] = std::move(it->second.first);
            outputs[y][u] = std::move(it->second.second);
        }
    }
    return DEADataset(std::move(units), std::move(years), std::move(input_labels),
                      std::move(output_labels), std::move(inputs), std::move(outputs));
}

}  // namespace placeval
