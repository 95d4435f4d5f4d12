#pragma once

#include <string>
#include <vector>

#include "placeval/errors.hpp"

namespace placeval {

/// Standard-form linear program: min c'x  s.t.  Ax = b, x >= 0.
struct LinearProgram {
    std::vector<double> objective;                       // c, length n
    std::vector<std::vector<double>> constraint_matrix;  // A, m rows of length n
    std::vector<double> rhs;                             // b, length m
    std::vector<std::string> variable_labels;            // length n (may be empty)
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
};

/// Two-phase dense simplex with Bland's anti-cycling rule.
///
/// On Optimal: primal feasibility residual <= 1e-9 * (1 + max|b|) and all
/// reduced costs >= -1e-9. Infeasible/Unbounded are reported as statuses.
/// Throws ArgumentError on dimension mismatch.
LPSolution solve_lp(const LinearProgram& problem);

}  // namespace placeval
