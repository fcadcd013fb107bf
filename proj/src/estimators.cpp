#include "gci/estimators.hpp"

#include <cmath>

namespace gci {

namespace {

double soft_threshold(double x, double thr) {
    if (x > thr) return x - thr;
    if (x < -thr) return x + thr;
    return 0.0;
}

void check_input(const AugmentedSeries& z) {
    if (!z.responses.allFinite() || !z.features.allFinite())
        throw ValidationError("non-finite value in series");
}

Vector solve_normal_equations(const Matrix& A, const Vector& b) {
    Eigen::LDLT<Matrix> ldlt(A);
    Vector x = ldlt.solve(b);
    // a consistent but rank-deficient system still solves with zero residual,
    // so also reject near-singular pivots
    const auto d = ldlt.vectorD();
    const double pivot_floor = 1e-12 * std::max(d.cwiseAbs().maxCoeff(), 1e-300);
    if (!x.allFinite() || d.minCoeff() < pivot_floor ||
        (A * x - b).norm() > 1e-8 * (b.norm() + 1.0))
        throw NumericalError("singular or ill-conditioned normal equations");
    return x;
}

}  // namespace

LinearFit fit_ridge(const AugmentedSeries& z, const FitConfig& cfg) {
    check_input(z);
    const int T = z.T();
    if (T < 1) throw DimensionError("empty series");
    const double lambda = cfg.penalty_weight.value_or(0.0);
    if (lambda < 0) throw ValidationError("penalty_weight must be non-negative");
    const Matrix& X = z.features;
    Matrix A = (X.transpose() * X) / T;
    A.diagonal().array() += lambda;
    const Vector b = (X.transpose() * z.responses) / T;
    LinearFit fit;
    fit.coefficients = solve_normal_equations(A, b);
    fit.method = lambda == 0.0 ? Method::Ols : Method::Ridge;
    fit.converged = true;
    fit.penalty_used = lambda;
    return fit;
}

double lasso_plugin_penalty(const AugmentedSeries& z, const FitConfig& cfg,
                            const Vector* warm_start) {
    const int T = z.T();
    const int p = z.p();
    const double rate = 1.1 * std::sqrt(2.0 * std::log(double(p) * T) / T);
    const double mean_y = z.responses.mean();
    const double sigma0 =
        std::sqrt((z.responses.array() - mean_y).square().sum() / T);
    if (sigma0 <= 0.0) return 0.0;
    FitConfig pilot = cfg;
    pilot.penalty_weight = sigma0 * rate;
    const LinearFit first = fit_lasso(z, pilot, warm_start);
    const Vector r = z.responses - z.features * first.coefficients;
    const double sigma1 = std::sqrt(r.squaredNorm() / T);
    return sigma1 * rate;
}

LinearFit fit_lasso(const AugmentedSeries& z, const FitConfig& cfg, const Vector* warm_start,
                    std::vector<double>* objective_trace) {
    check_input(z);
    const int T = z.T();
    const int p = z.p();
    if (T < 2) throw DimensionError("lasso needs at least two observations");
    if (cfg.tolerance <= 0 || cfg.max_iterations < 1)
        throw ValidationError("bad lasso configuration");

    const double lambda =
        cfg.penalty_weight ? *cfg.penalty_weight : lasso_plugin_penalty(z, cfg, warm_start);
    if (lambda < 0) throw ValidationError("penalty_weight must be non-negative");

    const Matrix& X = z.features;
    Vector col_ms(p);  // X_j'X_j / T, the internal unit-scale normalizer
    for (int j = 0; j < p; ++j) col_ms(j) = X.col(j).squaredNorm() / T;

    Vector beta = Vector::Zero(p);
    if (warm_start && warm_start->size() == p && warm_start->allFinite()) beta = *warm_start;
    Vector r = z.responses - X * beta;

    LinearFit fit;
    fit.method = Method::Lasso;
    fit.penalty_used = lambda;
    fit.converged = false;
    const double thr = lambda / 2.0;
    const auto objective = [&]() {
        return r.squaredNorm() / T + lambda * beta.lpNorm<1>();
    };
    if (objective_trace) {
        objective_trace->clear();
        objective_trace->push_back(objective());
    }
    int sweep = 0;
    for (; sweep < cfg.max_iterations; ++sweep) {
        double max_change = 0.0;
        for (int j = 0; j < p; ++j) {
            if (col_ms(j) <= 0.0) continue;  // dead column stays at zero
            const double old = beta(j);
            const double rho = X.col(j).dot(r) / T + col_ms(j) * old;
            const double next = soft_threshold(rho, thr) / col_ms(j);
            if (next != old) {
                r += X.col(j) * (old - next);
                beta(j) = next;
                max_change = std::max(max_change, std::abs(next - old));
            }
        }
        if (objective_trace) objective_trace->push_back(objective());
        if (max_change < cfg.tolerance) {
            fit.converged = true;
            ++sweep;
            break;
        }
    }
    fit.iterations = sweep;
    if (!beta.allFinite()) throw NumericalError("lasso produced non-finite coefficients");
    fit.coefficients = std::move(beta);
    return fit;
}

LinearFit fit_ar(const AugmentedSeries& z, const FitConfig& cfg) {
    check_input(z);
    const int K = cfg.lag_order;
    if (K < 1) throw ValidationError("lag order must be positive");
    const int T = z.T();
    if (T <= K) throw DimensionError("series too short for the requested lag order");
    const int m = T - K;
    Matrix D(m, K);
    Vector y(m);
    for (int i = 0; i < m; ++i) {
        const int t = K + i;
        y(i) = z.responses(t);
        for (int k = 0; k < K; ++k) D(i, k) = z.responses(t - 1 - k);
    }
    for (int k = 0; k < K; ++k) {
        const double ms = D.col(k).squaredNorm() / m;
        const double mean = D.col(k).mean();
        const double var = ms - mean * mean;
        if (var <= 1e-12 * std::max(1.0, ms))
            throw NumericalError("zero-variance lag regressor");
    }
    Matrix A = (D.transpose() * D) / m;
    Vector b = (D.transpose() * y) / m;
    LinearFit fit;
    fit.coefficients = solve_normal_equations(A, b);
    fit.method = Method::ArOls;
    fit.converged = true;
    return fit;
}

Vector residuals(const AugmentedSeries& z, const LinearFit& fit) {
    if (fit.method == Method::ArOls) {
        const int K = static_cast<int>(fit.coefficients.size());
        if (z.T() <= K) throw DimensionError("series too short for AR residuals");
        const int m = z.T() - K;
        Vector out(m);
        for (int i = 0; i < m; ++i) {
            const int t = K + i;
            double pred = 0.0;
            for (int k = 0; k < K; ++k) pred += fit.coefficients(k) * z.responses(t - 1 - k);
            out(i) = z.responses(t) - pred;
        }
        return out;
    }
    if (fit.coefficients.size() != z.p())
        throw DimensionError("coefficient length does not match feature dimension");
    return z.responses - z.features * fit.coefficients;
}

}  // namespace gci
