#include "gci/inference.hpp"

#include <cmath>
#include <fstream>

namespace gci {

int PredictionSet::retained_count() const {
    int c = 0;
    for (bool r : retained) c += r;
    return c;
}

double PredictionSet::interval_length() const {
    return interval ? interval->second - interval->first : 0.0;
}

PValue p_value(const ConformityScorer& scorer, const ObservedSeries& series,
               const Vector& candidate, const PermutationSet& pis) {
    const AugmentedSeries z = augment(series, candidate);
    const std::vector<double> scores = score_over_set(scorer, z, pis);

    int identity_index = -1;
    for (int i = 0; i < pis.size(); ++i)
        if (pis.elements[i].is_identity()) {
            identity_index = i;
            break;
        }
    const double s0 = identity_index >= 0 ? scores[identity_index] : score(scorer, z);

    PValue pv;
    pv.n = static_cast<int>(scores.size());
    int count = 0;
    pv.tie_count = 0;
    for (double s : scores) {
        if (s >= s0) ++count;
        if (s == s0) ++pv.tie_count;
    }
    pv.value = static_cast<double>(count) / pv.n;
    return pv;
}

int rank_threshold(double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0,1)");
    if (n < 1) throw ValidationError("n must be positive");
    return static_cast<int>(std::ceil(n * (1.0 - alpha)));
}

CandidateGrid make_grid(Vector center, double half_width, int H) {
    if (H < 2) throw ValidationError("grid needs at least two points");
    if (!(half_width > 0.0)) throw NumericalError("degenerate grid: zero half width");
    if (center.size() != 1)
        throw ValidationError("automatic grids are one-dimensional");
    CandidateGrid grid;
    grid.center = std::move(center);
    grid.half_width = half_width;
    grid.points.resize(H, 1);
    const double lo = grid.center(0) - half_width;
    const double step = 2.0 * half_width / (H - 1);
    for (int h = 0; h < H; ++h) grid.points(h, 0) = lo + h * step;
    return grid;
}

CandidateGrid build_grid(const ObservedSeries& series, const ConformityScorer& scorer,
                         int H, double width_multiplier) {
    if (series.t1 != 1)
        throw ValidationError("automatic grid construction requires T1 = 1");
    if (!(width_multiplier > 0.0)) throw ValidationError("width multiplier must be positive");

    // training-only view: observed history, no hypothesized tail
    AugmentedSeries train;
    train.responses = series.responses;
    train.features = series.features.topRows(series.t0);
    train.tail_len = 0;

    double center = 0.0;
    Vector e;
    switch (scorer.kind) {
        case ScoreKind::RegressionResidual: {
            FitConfig cfg = scorer.config;
            LinearFit fit;
            if (scorer.estimator == Method::Lasso) {
                fit = fit_lasso(train, cfg);
            } else {
                if (scorer.estimator == Method::Ols) cfg.penalty_weight = 0.0;
                fit = fit_ridge(train, cfg);
            }
            center = series.features.row(series.t0).dot(fit.coefficients);
            e = residuals(train, fit);
            break;
        }
        case ScoreKind::OracleResidual: {
            if (!scorer.oracle_beta) throw ValidationError("oracle score requires oracle_beta");
            LinearFit fit;
            fit.coefficients = *scorer.oracle_beta;
            fit.method = Method::Ols;
            center = series.features.row(series.t0).dot(fit.coefficients);
            e = residuals(train, fit);
            break;
        }
        case ScoreKind::ArResidual: {
            const LinearFit fit = fit_ar(train, scorer.config);
            const int K = scorer.config.lag_order;
            if (series.t0 < K) throw DimensionError("history shorter than lag order");
            center = 0.0;
            for (int k = 0; k < K; ++k)
                center += fit.coefficients(k) * series.responses(series.t0 - 1 - k);
            e = residuals(train, fit);
            break;
        }
    }

    const double mean = e.mean();
    const double sd = std::sqrt((e.array() - mean).square().sum() / e.size());
    if (!(sd > 1e-12))
        throw NumericalError("degenerate grid: training residuals have zero variance");
    Vector c(1);
    c(0) = center;
    return make_grid(std::move(c), width_multiplier * sd, H);
}

PredictionSet prediction_set(const ObservedSeries& series, const ConformityScorer& scorer,
                             const PermutationSet& pis, const CandidateGrid& grid,
                             double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0,1)");
    if (grid.tail_len() != series.t1)
        throw DimensionError("grid row length must equal T1");

    PredictionSet out;
    out.grid = grid;
    out.alpha = alpha;
    const int H = grid.size();
    out.pvalues.resize(H);
    out.retained.assign(H, false);
    for (int h = 0; h < H; ++h) {
        try {
            out.pvalues[h] = p_value(scorer, series, grid.points.row(h).transpose(), pis).value;
        } catch (const NumericalError& e) {
            throw NumericalError("grid row " + std::to_string(h + 1) + ": " + e.what());
        } catch (const DimensionError& e) {
            throw DimensionError("grid row " + std::to_string(h + 1) + ": " + e.what());
        }
        out.retained[h] = out.pvalues[h] > alpha;
    }

    if (series.t1 == 1) {
        double lo = 0.0, hi = 0.0;
        bool any = false;
        int runs = 0;
        bool prev = false;
        for (int h = 0; h < H; ++h) {
            if (out.retained[h]) {
                if (!any) {
                    lo = hi = grid.points(h, 0);
                    any = true;
                } else {
                    hi = grid.points(h, 0);
                }
                if (!prev) ++runs;
            }
            prev = out.retained[h];
        }
        if (any) out.interval = std::make_pair(lo, hi);
        out.contiguous = runs <= 1;
        out.boundary_touch = out.retained.front() || out.retained.back();
    }
    return out;
}

void write_prediction_csv(const std::string& path, const PredictionSet& set,
                          const std::string& config_comment) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    if (!config_comment.empty()) out << "# " << config_comment << "\n";
    out << "candidate_index";
    for (int j = 1; j <= set.grid.tail_len(); ++j) out << ",candidate_value" << j;
    out << ",p_value,retained\n";
    out.precision(17);
    for (int h = 0; h < set.grid.size(); ++h) {
        out << (h + 1);
        for (int j = 0; j < set.grid.tail_len(); ++j) out << "," << set.grid.points(h, j);
        out << "," << set.pvalues[h] << "," << (set.retained[h] ? 1 : 0) << "\n";
    }
}

}  // namespace gci
