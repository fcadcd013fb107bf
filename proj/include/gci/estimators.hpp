#ifndef GCI_ESTIMATORS_HPP
#define GCI_ESTIMATORS_HPP

#include <optional>
#include <vector>

#include "gci/series.hpp"

namespace gci {

enum class Method { Ridge, Lasso, Ols, ArOls };

struct FitConfig {
    // Absent penalty_weight means: 0 for ridge, plug-in rule for lasso.
    std::optional<double> penalty_weight;
    double tolerance = 1e-7;
    int max_iterations = 10000;
    int lag_order = 1;  // AR only
};

struct LinearFit {
    Vector coefficients;  // length p, or lag_order for AR
    Method method = Method::Ols;
    bool converged = true;
    int iterations = 0;
    double penalty_used = 0.0;
};

/// (1/T)||Y - Xb||^2 + lambda ||b||_2^2, solved by normal equations.
LinearFit fit_ridge(const AugmentedSeries& z, const FitConfig& cfg);

/// (1/T)||Y - Xb||^2 + lambda ||b||_1 by cyclic coordinate descent with
/// soft-thresholding. Columns are rescaled to unit second moment internally;
/// coefficients come back on the original scale. An optional warm start speeds
/// up grid sweeps where the data barely changes.
/// objective_trace, when given, records the penalized objective after every
/// sweep (initial point included).
LinearFit fit_lasso(const AugmentedSeries& z, const FitConfig& cfg,
                    const Vector* warm_start = nullptr,
                    std::vector<double>* objective_trace = nullptr);

/// Plug-in penalty 1.1 * sigma_hat * sqrt(2 log(p T) / T) with sigma_hat from
/// one refit pass. Used by fit_lasso when cfg.penalty_weight is absent.
double lasso_plugin_penalty(const AugmentedSeries& z, const FitConfig& cfg,
                            const Vector* warm_start = nullptr);

/// Least squares of Y_t on its lag_order lags over t = K+1..T.
LinearFit fit_ar(const AugmentedSeries& z, const FitConfig& cfg);

/// Fitted residuals: length T for regression fits, length T - K for AR fits
/// (indexed t = K+1..T).
Vector residuals(const AugmentedSeries& z, const LinearFit& fit);

}  // namespace gci

#endif
