#include "placeval/ols.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "lsq_core.hpp"
#include "placeval/special.hpp"

namespace placeval {

double aic_score(double rss, int n_obs, int n_params) {
    if (n_obs <= n_params) throw ArgumentError("AIC needs n_obs > n_params");
    if (rss <= 0.0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(n_obs) * std::log(rss / static_cast<double>(n_obs)) +
           2.0 * static_cast<double>(n_params);
}

double aicc_score(double rss, int n_obs, int n_params) {
    const double base = aic_score(rss, n_obs, n_params);
    const int denom = n_obs - n_params - 1;
    if (denom <= 0) return std::numeric_limits<double>::infinity();
    return base + 2.0 * static_cast<double>(n_params) * static_cast<double>(n_params + 1) /
                      static_cast<double>(denom);
}

OLSFit ols_fit(const std::vector<double>& y, const std::vector<std::vector<double>>& X,
               const std::vector<std::string>& labels, AicVariant variant) {
    const int n = static_cast<int>(y.size());
    const int p = static_cast<int>(X.size());
    if (labels.size() != X.size()) throw ArgumentError("one label per control column required");
    for (const auto& col : X)
        if (static_cast<int>(col.size()) != n)
            throw ArgumentError("control column length != observation count");
    if (p + 1 > n - 1)
        throw ArgumentError("need n_obs >= n_controls + 2 for a residual degree of freedom");

    Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
    Eigen::MatrixXd design(n, p + 1);
    design.col(0).setOnes();
    for (int j = 0; j < p; ++j)
        design.col(j + 1) = Eigen::Map<const Eigen::VectorXd>(X[j].data(), n);

    const auto ls = detail::solve_least_squares(design, yv);
    if (!ls.full_rank) throw RankError("design matrix is rank deficient");

    OLSFit fit;
    fit.control_units = labels;
    fit.intercept = ls.beta[0];
    fit.coefficients.assign(ls.beta.data() + 1, ls.beta.data() + 1 + p);
    fit.rss = ls.rss;
    fit.n_obs = n;
    fit.df_resid = n - (p + 1);

    const double tss = (yv.array() - yv.mean()).square().sum();
    fit.r_squared = detail::r_squared_from(fit.rss, tss);
    fit.aic = (variant == AicVariant::Aicc) ? aicc_score(fit.rss, n, p + 1)
                                            : aic_score(fit.rss, n, p + 1);

    // covariance of beta via the triangular factor: (D'D)^-1 = P R^-1 R^-T P'
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    Eigen::MatrixXd R =
        qr.matrixR().topLeftCorner(p + 1, p + 1).template triangularView<Eigen::Upper>();
    Eigen::MatrixXd r_inv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p + 1, p + 1));
    Eigen::MatrixXd cov_unscaled = r_inv * r_inv.transpose();
    cov_unscaled = qr.colsPermutation() * cov_unscaled * qr.colsPermutation().transpose();

    const double sigma2 = fit.rss / static_cast<double>(fit.df_resid);
    fit.std_errors.resize(p);
    fit.t_values.resize(p);
    fit.p_values.resize(p);
    for (int j = 0; j < p; ++j) {
        const double var = sigma2 * cov_unscaled(j + 1, j + 1);
        const double se = var > 0.0 ? std::sqrt(var) : 0.0;
        fit.std_errors[j] = se;
        if (se > 0.0) {
            fit.t_values[j] = fit.coefficients[j] / se;
            fit.p_values[j] = student_t_two_sided_p(fit.t_values[j], fit.df_resid);
        } else {
            fit.t_values[j] = std::numeric_limits<double>::quiet_NaN();
            fit.p_values[j] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return fit;
}

}  // namespace placeval
