#include "gci/dgp.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "gci/rng.hpp"

namespace gci {

GeneratedData generate(const DgpConfig& cfg) {
    if (cfg.T < 2 || cfg.T1 < 1 || cfg.T1 >= cfg.T)
        throw ValidationError("need T > T1 >= 1");
    if (cfg.p < 1) throw ValidationError("p must be positive");
    if (!(cfg.rho >= 0.0 && cfg.rho < 1.0)) throw ValidationError("rho must lie in [0,1)");
    if (cfg.active_count < 1 || cfg.active_count > cfg.p)
        throw ValidationError("active_count must lie in [1,p]");
    if (!(cfg.beta_norm > 0.0)) throw ValidationError("beta_norm must be positive");

    Rng rng(cfg.seed);
    const int T = cfg.T;
    const int t0 = T - cfg.T1;

    Matrix X(T, cfg.p);
    for (int t = 0; t < T; ++t)
        for (int j = 0; j < cfg.p; ++j) X(t, j) = rng.normal();

    Vector beta = Vector::Zero(cfg.p);
    const double value = cfg.beta_norm / std::sqrt(double(cfg.active_count));
    for (int j = 0; j < cfg.active_count; ++j) beta(j) = value;

    // eps_t = rho eps_{t-1} + xi_t, xi ~ N(0, 1 - rho^2), eps_0 = 0
    Vector eps(T);
    const double xi_sd = std::sqrt(1.0 - cfg.rho * cfg.rho);
    double prev = 0.0;
    for (int t = 0; t < T; ++t) {
        prev = cfg.rho * prev + xi_sd * rng.normal();
        eps(t) = prev;
    }

    const Vector y = X * beta + eps;

    GeneratedData out;
    out.series = make_observed_series(y.head(t0), X, cfg.T1);
    out.true_tail = y.tail(cfg.T1);
    out.beta = std::move(beta);
    out.errors = std::move(eps);
    return out;
}

Vector generate_ar_response(const Vector& rho_vec, int T, double innovation_sd,
                            std::uint64_t seed) {
    const int K = static_cast<int>(rho_vec.size());
    if (K < 1) throw ValidationError("need at least one autoregressive coefficient");
    if (T < 1) throw ValidationError("T must be positive");
    if (!(innovation_sd > 0.0)) throw ValidationError("innovation_sd must be positive");

    // stationarity via the companion matrix spectral radius
    Matrix companion = Matrix::Zero(K, K);
    companion.row(0) = rho_vec.transpose();
    for (int k = 1; k < K; ++k) companion(k, k - 1) = 1.0;
    const double radius = companion.eigenvalues().cwiseAbs().maxCoeff();
    if (radius >= 1.0 - 1e-10)
        throw ValidationError("autoregressive coefficients are not stationary");

    constexpr int kBurnIn = 500;
    Rng rng(seed);
    std::vector<double> buf(K, 0.0);  // most recent first
    Vector out(T);
    for (int t = -kBurnIn; t < T; ++t) {
        double v = innovation_sd * rng.normal();
        for (int k = 0; k < K; ++k) v += rho_vec(k) * buf[k];
        for (int k = K - 1; k > 0; --k) buf[k] = buf[k - 1];
        buf[0] = v;
        if (t >= 0) out(t) = v;
    }
    return out;
}

}  // namespace gci
