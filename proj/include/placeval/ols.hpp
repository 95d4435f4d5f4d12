#pragma once

#include <string>
#include <vector>

#include "placeval/panel.hpp"

namespace placeval {

/// Least-squares fit of an outcome on a set of control series, intercept
/// always included. Inference vectors are aligned with `coefficients`
/// (the intercept carries no standard error here).
struct OLSFit {
    std::vector<std::string> control_units;
    double intercept = 0.0;
    std::vector<double> coefficients;
    double rss = 0.0;
    double r_squared = 0.0;
    double aic = 0.0;
    std::vector<double> std_errors;
    std::vector<double> t_values;
    std::vector<double> p_values;
    int n_obs = 0;
    int df_resid = 0;
};

/// Fits y on [1 | X] by Householder QR with column pivoting.
///
/// X is column-major: X[j] is the series for labels[j]. Residuals are
/// orthogonal to every column within 1e-8 * |y|; p-values are two-sided
/// Student-t with df_resid degrees of freedom. Throws RankError when the
/// design is rank deficient and ArgumentError on shape errors.
OLSFit ols_fit(const std::vector<double>& y, const std::vector<std::vector<double>>& X,
               const std::vector<std::string>& labels, AicVariant variant = AicVariant::Aic);

/// Gaussian-likelihood AIC: n*ln(rss/n) + 2k, k = n_params (intercept
/// counted). rss = 0 returns -infinity so exact fits dominate.
double aic_score(double rss, int n_obs, int n_params);

/// Small-sample corrected variant: AIC + 2k(k+1)/(n-k-1).
double aicc_score(double rss, int n_obs, int n_params);

}  // namespace placeval
