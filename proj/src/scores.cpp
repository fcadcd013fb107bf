#include "gci/scores.hpp"

#include <cmath>

namespace gci {

namespace {

LinearFit fit_for(const ConformityScorer& scorer, const AugmentedSeries& z) {
    switch (scorer.kind) {
        case ScoreKind::RegressionResidual: {
            FitConfig cfg = scorer.config;
            switch (scorer.estimator) {
                case Method::Ols:
                    cfg.penalty_weight = 0.0;
                    return fit_ridge(z, cfg);
                case Method::Ridge:
                    return fit_ridge(z, cfg);
                case Method::Lasso: {
                    if (scorer.lasso_warm_cache) {
                        LinearFit f = fit_lasso(z, cfg, scorer.lasso_warm_cache.get());
                        *scorer.lasso_warm_cache = f.coefficients;
                        return f;
                    }
                    return fit_lasso(z, cfg);
                }
                default:
                    throw ValidationError("unsupported estimator for a regression score");
            }
        }
        case ScoreKind::ArResidual:
            return fit_ar(z, scorer.config);
        case ScoreKind::OracleResidual: {
            if (!scorer.oracle_beta)
                throw ValidationError("oracle score requires oracle_beta");
            if (scorer.oracle_beta->size() != z.p())
                throw DimensionError("oracle_beta length does not match feature dimension");
            LinearFit fit;
            fit.coefficients = *scorer.oracle_beta;
            fit.method = Method::Ols;
            return fit;
        }
    }
    throw ValidationError("unknown score kind");
}

double lp_norm(const Vector& tail_residuals, double power) {
    if (power < 1.0) throw ValidationError("norm power must be at least 1");
    double acc = 0.0;
    for (int i = 0; i < tail_residuals.size(); ++i)
        acc += std::pow(std::abs(tail_residuals(i)), power);
    const double s = power == 1.0 ? acc : std::pow(acc, 1.0 / power);
    if (!std::isfinite(s)) throw NumericalError("non-finite conformity score");
    return s;
}

}  // namespace

ConformityScorer make_regression_scorer(Method estimator, FitConfig cfg, double norm_power) {
    ConformityScorer s;
    s.kind = ScoreKind::RegressionResidual;
    s.estimator = estimator;
    s.config = cfg;
    s.norm_power = norm_power;
    return s;
}

ConformityScorer make_ar_scorer(int lag_order, double norm_power) {
    ConformityScorer s;
    s.kind = ScoreKind::ArResidual;
    s.estimator = Method::ArOls;
    s.config.lag_order = lag_order;
    s.norm_power = norm_power;
    return s;
}

ConformityScorer make_oracle_scorer(Vector beta, double norm_power) {
    ConformityScorer s;
    s.kind = ScoreKind::OracleResidual;
    s.estimator = Method::Ols;
    s.oracle_beta = std::move(beta);
    s.norm_power = norm_power;
    return s;
}

double score(const ConformityScorer& scorer, const AugmentedSeries& z) {
    const LinearFit fit = fit_for(scorer, z);
    const Vector e = residuals(z, fit);
    if (e.size() < z.tail_len)
        throw DimensionError("fewer residuals than tail positions");
    return lp_norm(e.tail(z.tail_len), scorer.norm_power);
}

bool fast_path_eligible(const ConformityScorer& scorer) {
    return scorer.kind != ScoreKind::ArResidual;
}

std::vector<double> score_over_set(const ConformityScorer& scorer, const AugmentedSeries& z,
                                   const PermutationSet& pis, bool force_naive) {
    if (pis.domain != z.T())
        throw DimensionError("permutation set domain does not match series length");
    std::vector<double> out;
    out.reserve(pis.size());
    if (!force_naive && fast_path_eligible(scorer)) {
        // fit once; permuting the data only permutes the residual vector
        const LinearFit fit = fit_for(scorer, z);
        const Vector e = residuals(z, fit);
        const int t0 = z.t0();
        for (const auto& pi : pis.elements) {
            Vector tail(z.tail_len);
            for (int i = 0; i < z.tail_len; ++i) tail(i) = e(pi(t0 + i));
            out.push_back(lp_norm(tail, scorer.norm_power));
        }
        return out;
    }
    for (const auto& pi : pis.elements) out.push_back(score(scorer, apply_permutation(z, pi)));
    return out;
}

}  // namespace gci
