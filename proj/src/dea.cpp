#include "placeval/dea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include "placeval/simplex.hpp"

namespace placeval {
namespace {

constexpr double kRtsTol = 1e-6;

RtsClass classify_rts(double lambda_sum) {
    if (lambda_sum > 1.0 + kRtsTol) return RtsClass::Increasing;
    if (lambda_sum < 1.0 - kRtsTol) return RtsClass::Decreasing;
    return RtsClass::Constant;
}

// Radial input-oriented CRS program for one unit. Variables are
// [theta, lambda_j (reference units), s_in (m), s_out (r)]:
//   -x_iq * theta + sum_j x_ij lambda_j + s_i = 0        (inputs)
//                   sum_j y_kj lambda_j - s_k = y_kq     (outputs)
EfficiencyResult run_radial_model(const DEADataset& data, int year, const std::string& unit,
                                  bool exclude_self) {
    const std::size_t yi = data.year_index(year);
    const std::size_t q = data.unit_index(unit);
    const std::size_t n = data.n_units();
    const std::size_t m = data.n_inputs();
    const std::size_t r = data.n_outputs();

    std::vector<std::size_t> ref;
    for (std::size_t j = 0; j < n; ++j)
        if (!exclude_self || j != q) ref.push_back(j);
    if (ref.empty()) throw ArgumentError("empty reference set for unit " + unit);

    const std::size_t n_vars = 1 + ref.size() + m + r;
    LinearProgram lp;
    lp.objective.assign(n_vars, 0.0);
    lp.objective[0] = 1.0;
    lp.variable_labels.reserve(n_vars);
    lp.variable_labels.push_back("theta");
    for (std::size_t j : ref) lp.variable_labels.push_back("lambda:" + data.unit_names()[j]);
    for (const auto& l : data.input_labels()) lp.variable_labels.push_back("slack_in:" + l);
    for (const auto& l : data.output_labels()) lp.variable_labels.push_back("slack_out:" + l);

    const auto& xq = data.inputs_of(yi, q);
    const auto& yq = data.outputs_of(yi, q);
    lp.constraint_matrix.assign(m + r, std::vector<double>(n_vars, 0.0));
    lp.rhs.assign(m + r, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = lp.constraint_matrix[i];
        row[0] = -xq[i];
        for (std::size_t a = 0; a < ref.size(); ++a)
            row[1 + a] = data.inputs_of(yi, ref[a])[i];
        row[1 + ref.size() + i] = 1.0;
    }
    for (std::size_t k = 0; k < r; ++k) {
        auto& row = lp.constraint_matrix[m + k];
        for (std::size_t a = 0; a < ref.size(); ++a)
            row[1 + a] = data.outputs_of(yi, ref[a])[k];
        row[1 + ref.size() + m + k] = -1.0;
        lp.rhs[m + k] = yq[k];
    }

    const LPSolution sol = solve_lp(lp);
    EfficiencyResult res;
    if (sol.status == LPStatus::Infeasible) {
        res.feasible = false;
        res.theta = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    if (sol.status != LPStatus::Optimal)
        throw Error("radial efficiency program unbounded for unit " + unit);

    res.feasible = true;
    res.theta = sol.x[0];
    double lsum = 0.0;
    for (std::size_t a = 0; a < ref.size(); ++a) {
        res.lambdas[data.unit_names()[ref[a]]] = sol.x[1 + a];
        lsum += sol.x[1 + a];
    }
    res.lambda_sum = lsum;
    res.input_slacks.assign(sol.x.begin() + 1 + static_cast<std::ptrdiff_t>(ref.size()),
                            sol.x.begin() + 1 + static_cast<std::ptrdiff_t>(ref.size() + m));
    res.output_slacks.assign(sol.x.begin() + 1 + static_cast<std::ptrdiff_t>(ref.size() + m),
                             sol.x.begin() + 1 + static_cast<std::ptrdiff_t>(ref.size() + m + r));
    res.rts_class = classify_rts(lsum);
    return res;
}

}  // namespace

EfficiencyResult ccr_efficiency(const DEADataset& data, int year, const std::string& unit) {
    return run_radial_model(data, year, unit, false);
}

EfficiencyResult super_efficiency(const DEADataset& data, int year, const std::string& unit) {
    if (data.n_units() < 2)
        throw ArgumentError("super-efficiency needs at least 2 units per year");
    return run_radial_model(data, year, unit, true);
}

OutcomePanel efficiency_table(const DEADataset& data, int threads) {
    const std::size_t ny = data.n_years();
    const std::size_t nu = data.n_units();
    std::vector<std::vector<double>> values(ny, std::vector<double>(nu, 0.0));

    auto solve_cell = [&](std::size_t flat) {
        const std::size_t y = flat / nu;
        const std::size_t u = flat % nu;
        const auto res =
            super_efficiency(data, data.years()[y], data.unit_names()[u]);
        values[y][u] = res.feasible ? res.theta : std::numeric_limits<double>::quiet_NaN();
    };

    const std::size_t total = ny * nu;
    if (threads <= 1) {
        for (std::size_t f = 0; f < total; ++f) solve_cell(f);
    } else {
        const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
        std::vector<std::thread> workers;
        workers.reserve(nw);
        for (std::size_t w = 0; w < nw; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t f = w; f < total; f += nw) solve_cell(f);
            });
        }
        for (auto& t : workers) t.join();
    }
    return OutcomePanel(data.unit_names(), data.years(), std::move(values), "super_efficiency");
}

std::map<int, double> yearly_range(const OutcomePanel& panel) {
    std::map<int, double> out;
    for (std::size_t y = 0; y < panel.n_years(); ++y) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t u = 0; u < panel.n_units(); ++u) {
            const double v = panel.value_at(y, u);
            if (std::isnan(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out[panel.years()[y]] = (hi >= lo) ? hi - lo : 0.0;
    }
    return out;
}

std::string render_panel_table(const OutcomePanel& panel) {
    const auto ranges = yearly_range(panel);
    std::vector<std::size_t> width(panel.n_units());
    for (std::size_t u = 0; u < panel.n_units(); ++u)
        width[u] = std::max<std::size_t>(panel.unit_names()[u].size(), 5);

    auto cell = [](double v) -> std::string {
        return std::isnan(v) ? "INF" : fmt::format("{:.2f}", v);
    };

    std::string out = fmt::format("{:<6}", "year");
    for (std::size_t u = 0; u < panel.n_units(); ++u)
        out += fmt::format("  {:>{}}", panel.unit_names()[u], width[u]);
    out += fmt::format("  {:>6}\n", "range");

    for (std::size_t y = 0; y < panel.n_years(); ++y) {
        out += fmt::format("{:<6}", panel.years()[y]);
        for (std::size_t u = 0; u < panel.n_units(); ++u)
            out += fmt::format("  {:>{}}", cell(panel.value_at(y, u)), width[u]);
        out += fmt::format("  {:>6}\n", cell(ranges.at(panel.years()[y])));
    }

    // mean row recomputed from the stored cells; NaN flags skipped
    out += fmt::format("{:<6}", "mean");
    for (std::size_t u = 0; u < panel.n_units(); ++u) {
        double sum = 0.0;
        std::size_t cnt = 0;
        for (std::size_t y = 0; y < panel.n_years(); ++y) {
            const double v = panel.value_at(y, u);
            if (std::isnan(v)) continue;
            sum += v;
            ++cnt;
        }
        out += fmt::format("  {:>{}}", cnt ? cell(sum / static_cast<double>(cnt)) : "INF",
                           width[u]);
    }
    double rsum = 0.0;
    for (const auto& [year, rng] : ranges) rsum += rng;
    out += fmt::format("  {:>6}\n",
                       cell(rsum / static_cast<double>(std::max<std::size_t>(1, ranges.size()))));
    return out;
}

}  // namespace placeval
