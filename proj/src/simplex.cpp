#include "placeval/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace placeval {
namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;

struct Tableau {
    std::size_t n_rows;
    std::size_t n_cols;  // variable columns (originals + artificials)
    std::vector<std::vector<double>> rows;  // each length n_cols + 1, last = rhs
    std::vector<double> cost;               // length n_cols + 1, last = -objective
    std::vector<std::size_t> basis;         // basic variable per row

    void pivot(std::size_t r, std::size_t s) {
        auto& prow = rows[r];
        const double inv = 1.0 / prow[s];
        for (auto& v : prow) v *= inv;
        prow[s] = 1.0;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == r) continue;
            const double f = rows[i][s];
            if (f == 0.0) continue;
            auto& row = rows[i];
            for (std::size_t j = 0; j <= n_cols; ++j) row[j] -= f * prow[j];
            row[s] = 0.0;
        }
        const double f = cost[s];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= n_cols; ++j) cost[j] -= f * prow[j];
            cost[s] = 0.0;
        }
        basis[r] = s;
    }

    // Bland's rule: smallest-index entering column with negative reduced
    // cost, smallest-basic-index leaving row among minimum ratios.
    // Returns false when no entering column exists (optimal).
    // Sets *unbounded when an entering column has no positive entries.
    bool step(std::size_t max_enter_col, bool* unbounded) {
        std::size_t enter = n_cols;
        for (std::size_t j = 0; j < max_enter_col; ++j) {
            if (cost[j] < -kCostTol) {
                enter = j;
                break;
            }
        }
        if (enter == n_cols) return false;

        std::size_t leave = n_rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_rows; ++i) {
            const double a = rows[i][enter];
            if (a <= kPivotTol) continue;
            const double ratio = rows[i][n_cols] / a;
            if (leave == n_rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == n_rows) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& problem) {
    const std::size_t m = problem.constraint_matrix.size();
    const std::size_t n = problem.objective.size();
    if (problem.rhs.size() != m)
        throw ArgumentError("rhs length " + std::to_string(problem.rhs.size()) +
                            " != row count " + std::to_string(m));
    for (const auto& row : problem.constraint_matrix)
        if (row.size() != n)
            throw ArgumentError("constraint row length " + std::to_string(row.size()) +
                                " != objective length " + std::to_string(n));
    if (!problem.variable_labels.empty() && problem.variable_labels.size() != n)
        throw ArgumentError("variable label count mismatch");
    if (n == 0) throw ArgumentError("program has no variables");

    double b_max = 0.0;
    for (double b : problem.rhs) b_max = std::max(b_max, std::fabs(b));

    Tableau t;
    t.n_rows = m;
    t.n_cols = n + m;  // originals + one artificial per row
    t.rows.assign(m, std::vector<double>(t.n_cols + 1, 0.0));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = problem.rhs[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j)
            t.rows[i][j] = sign * problem.constraint_matrix[i][j];
        t.rows[i][n + i] = 1.0;
        t.rows[i][t.n_cols] = sign * problem.rhs[i];
        t.basis[i] = n + i;
    }

    // Phase 1: minimize the artificial sum. Reduced costs of the original
    // columns are the negated column sums over all rows.
    t.cost.assign(t.n_cols + 1, 0.0);
    for (std::size_t j = 0; j <= t.n_cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t.rows[i][j];
        t.cost[j] = -s;
    }
    for (std::size_t i = 0; i < m; ++i) t.cost[n + i] = 0.0;

    bool unbounded = false;
    while (t.step(n, &unbounded)) {
    }
    const double phase1_obj = -t.cost[t.n_cols];
    const double feas_tol = 1e-9 * (1.0 + b_max);
    if (phase1_obj > feas_tol) return {LPStatus::Infeasible, {}, 0.0};

    // Remove artificials from the basis: pivot each out on any original
    // column with a usable coefficient; rows that have none are redundant
    // and get dropped.
    for (std::size_t i = 0; i < t.n_rows;) {
        if (t.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t s = t.n_cols;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::fabs(t.rows[i][j]) > kPivotTol) {
                s = j;
                break;
            }
        }
        if (s < n) {
            t.pivot(i, s);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            --t.n_rows;
        }
    }

    // Phase 2 with the real objective priced against the current basis.
    t.cost.assign(t.n_cols + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) t.cost[j] = problem.objective[j];
    for (std::size_t i = 0; i < t.n_rows; ++i) {
        const double cb = problem.objective[t.basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= t.n_cols; ++j) t.cost[j] -= cb * t.rows[i][j];
    }

    unbounded = false;
    while (t.step(n, &unbounded)) {
    }
    if (unbounded) return {LPStatus::Unbounded, {}, 0.0};

    LPSolution sol;
    sol.status = LPStatus::Optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < t.n_rows; ++i) {
        if (t.basis[i] < n) sol.x[t.basis[i]] = std::max(0.0, t.rows[i][t.n_cols]);
    }
    sol.objective_value = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective_value += problem.objective[j] * sol.x[j];
    return sol;
}

}  // namespace placeval
