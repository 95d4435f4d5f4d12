#pragma once

#include <Eigen/Dense>

namespace placeval::detail {

struct LeastSquares {
    Eigen::VectorXd beta;
    double rss = 0.0;
    bool full_rank = false;
};

// QR with column pivoting on the full design (intercept included by the
// caller). Both ols_fit and the subset search go through here so that a
// given design always yields bit-identical rss/R^2.
inline LeastSquares solve_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y) {
    LeastSquares out;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols()) return out;
    out.full_rank = true;
    out.beta = qr.solve(y);
    out.rss = (y - design * out.beta).squaredNorm();
    return out;
}

inline double r_squared_from(double rss, double tss) {
    if (tss > 0.0) return 1.0 - rss / tss;
    return rss == 0.0 ? 1.0 : 0.0;
}

}  // namespace placeval::detail
