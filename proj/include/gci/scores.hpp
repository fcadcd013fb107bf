#ifndef GCI_SCORES_HPP
#define GCI_SCORES_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gci/estimators.hpp"
#include "gci/series.hpp"

namespace gci {

enum class ScoreKind { RegressionResidual, ArResidual, OracleResidual };

/// Maps an augmented series to the lp norm of its last T1 fitted residuals.
struct ConformityScorer {
    ScoreKind kind = ScoreKind::RegressionResidual;
    Method estimator = Method::Lasso;  // RegressionResidual only
    double norm_power = 1.0;
    FitConfig config;
    std::optional<Vector> oracle_beta;  // OracleResidual only

    // When set, lasso fits warm-start from (and write back) this vector.
    // Speeds up grid sweeps where consecutive candidates barely differ.
    // A scorer holding a cache must not be shared across threads.
    std::shared_ptr<Vector> lasso_warm_cache;
};

ConformityScorer make_regression_scorer(Method estimator, FitConfig cfg = {},
                                        double norm_power = 1.0);
ConformityScorer make_ar_scorer(int lag_order, double norm_power = 1.0);
ConformityScorer make_oracle_scorer(Vector beta, double norm_power = 1.0);

double score(const ConformityScorer& scorer, const AugmentedSeries& z);

/// Whether the fit-once-and-permute-residuals shortcut is sound for this
/// scorer. AR is excluded: lags are rebuilt on the permuted sequence.
bool fast_path_eligible(const ConformityScorer& scorer);

/// Scores of z under every permutation in the set, in set order. Uses the
/// residual-permutation shortcut when eligible; set force_naive to refit per
/// permutation regardless.
std::vector<double> score_over_set(const ConformityScorer& scorer,
                                   const AugmentedSeries& z,
                                   const PermutationSet& pis,
                                   bool force_naive = false);

}  // namespace gci

#endif
