// End-to-end acceptance runner. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gci/diagnostics.hpp"
#include "gci/harness.hpp"
#include "gci/rng.hpp"

using namespace gci;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

Matrix random_matrix(int rows, int cols, Rng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

Vector random_vector(int n, Rng& rng) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    return v;
}

const CoverageRow* find_row(const std::vector<CoverageRow>& rows, int T, double rho) {
    for (const auto& r : rows)
        if (r.T == T && r.rho == rho) return &r;
    return nullptr;
}

// ---- criteria 1-3: coverage and length on the sparse-regression design ----

void coverage_criteria() {
    CoverageSettings s;
    s.T_list = {100, 200};
    s.rho_list = {0.0, 0.3, 0.6, 0.95};
    s.replications = 500;
    s.alpha = 0.1;
    s.H = 100;
    s.p = 100;
    s.scheme = Scheme::NOB;
    s.block_size = 1;
    s.estimator = Method::Lasso;
    s.seed = 20240901;
    const auto rows = run_coverage(s);

    char buf[256];
    {
        const auto* r = find_row(rows, 100, 0.0);
        std::snprintf(buf, sizeof(buf), "coverage=%.4f (se=%.4f, grid_miss=%d)", r->coverage,
                      r->mc_standard_error, r->grid_miss);
        report(1, "exact validity at rho=0", r->coverage >= 0.87 && r->grid_miss < 5, buf);
    }
    {
        const auto* r3 = find_row(rows, 100, 0.3);
        const auto* r6 = find_row(rows, 100, 0.6);
        const auto* r95 = find_row(rows, 100, 0.95);
        const bool ok = std::abs(r3->coverage - 0.90) <= 0.05 &&
                        std::abs(r6->coverage - 0.90) <= 0.05 &&
                        r95->coverage >= 0.80 && r95->coverage <= 0.92;
        std::snprintf(buf, sizeof(buf), "coverage rho=0.3: %.4f, rho=0.6: %.4f, rho=0.95: %.4f",
                      r3->coverage, r6->coverage, r95->coverage);
        report(2, "approximate validity under dependence", ok, buf);
    }
    {
        bool ok = true;
        std::string detail;
        for (double rho : {0.0, 0.3, 0.6}) {
            const auto* a = find_row(rows, 100, rho);
            const auto* b = find_row(rows, 200, rho);
            ok = ok && b->mean_length <= a->mean_length;
            std::snprintf(buf, sizeof(buf), "rho=%.1f: %.3f->%.3f ", rho, a->mean_length,
                          b->mean_length);
            detail += buf;
        }
        report(3, "interval length decreases in T", ok, detail);
    }
}

// ---- criterion 4: group axioms, exhaustively for small T ----

void group_criterion() {
    bool ok = true;
    int checked = 0;
    for (int T = 2; T <= 24; ++T) {
        ok = ok && verify_group(make_cso(T));
        ++checked;
        for (int b = 1; b <= T; ++b) {
            if (T % b != 0) continue;
            ok = ok && verify_group(make_nob(T, b));
            const auto ob = make_ob(T, b);
            ok = ok && verify_group(ob);
            // set equality with CSO
            std::vector<std::vector<int>> a, c;
            for (const auto& e : ob.elements) a.push_back(e.map());
            for (const auto& e : make_cso(T).elements) c.push_back(e.map());
            std::sort(a.begin(), a.end());
            std::sort(c.begin(), c.end());
            ok = ok && a == c;
            ++checked;
        }
        // one split layout per T when feasible
        if (T >= 4) ok = ok && verify_group(make_split(T, T - 1, T / 2 + 1, 1));
    }
    report(4, "group axioms for NOB/CSO/OB/SPLIT, T<=24", ok,
           std::to_string(checked) + " sets checked");
}

// ---- criterion 5: order-statistic identity ----

void order_statistic_criterion() {
    Rng rng(505);
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 49);
        std::vector<double> scores(n);
        for (auto& s : scores) s = std::floor(rng.uniform() * 5);  // heavy ties
        const double alpha = 0.01 + rng.uniform() * 0.98;
        int count = 0;
        for (double s : scores)
            if (s >= scores[0]) ++count;
        const bool by_p = static_cast<double>(count) / n <= alpha;
        std::vector<double> sorted = scores;
        std::sort(sorted.begin(), sorted.end());
        const bool by_order = scores[0] > sorted[rank_threshold(alpha, n) - 1];
        if (by_p != by_order) ++violations;
    }
    report(5, "order-statistic identity over 10^4 score vectors", violations == 0,
           std::to_string(violations) + " violations");
}

// ---- criterion 6: independent brute-force p-value ----

void brute_force_criterion() {
    Rng rng(606);
    // the three whole-block rotations for T=6, b=2, written out by hand
    const int perms[3][6] = {{0, 1, 2, 3, 4, 5}, {2, 3, 4, 5, 0, 1}, {4, 5, 0, 1, 2, 3}};
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix X = random_matrix(6, 2, rng);
        Vector beta = random_vector(2, rng);
        Vector y(6);
        for (int t = 0; t < 6; ++t) y(t) = X.row(t).dot(beta) + rng.normal();

        // library path
        const auto series = make_observed_series(y.head(5), X, 1);
        const auto pv =
            p_value(make_oracle_scorer(beta), series, y.tail(1), make_nob(6, 2));

        // independent path: explicit loops, no library calls
        double scores[3];
        for (int j = 0; j < 3; ++j) {
            double yp[6];
            double xp[6][2];
            for (int t = 0; t < 6; ++t) {
                yp[t] = y(perms[j][t]);
                xp[t][0] = X(perms[j][t], 0);
                xp[t][1] = X(perms[j][t], 1);
            }
            scores[j] = std::abs(yp[5] - (xp[5][0] * beta(0) + xp[5][1] * beta(1)));
        }
        int count = 0;
        for (int j = 0; j < 3; ++j)
            if (scores[j] >= scores[0]) ++count;
        if (pv.value != static_cast<double>(count) / 3.0) ++mismatches;
    }
    report(6, "brute-force p-value oracle, 100 random datasets", mismatches == 0,
           std::to_string(mismatches) + " mismatches");
}

// ---- criterion 7: lasso correctness ----

void lasso_criterion() {
    Rng rng(707);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int p = 2 + static_cast<int>(rng.uniform() * 19);
        const int T = p + 10 + static_cast<int>(rng.uniform() * 30);
        Matrix X = random_matrix(T, p, rng);
        Eigen::HouseholderQR<Matrix> qr(X);
        X = (qr.householderQ() * Matrix::Identity(T, p)) * std::sqrt(double(T));
        AugmentedSeries z;
        z.features = X;
        z.responses = random_vector(T, rng);
        z.tail_len = 1;
        FitConfig cfg;
        cfg.penalty_weight = 0.05 + rng.uniform() * 0.5;
        cfg.tolerance = 1e-10;
        const auto fit = fit_lasso(z, cfg);
        const Vector corr = X.transpose() * z.responses / T;
        for (int j = 0; j < p; ++j) {
            const double thr = *cfg.penalty_weight / 2.0;
            const double expect =
                std::copysign(std::max(std::abs(corr(j)) - thr, 0.0), corr(j));
            if (std::abs(fit.coefficients(j) - expect) > 1e-6) ++bad;
        }
    }

    // KKT at the plug-in penalty on the sparse high-dimensional design
    DgpConfig dgp;
    dgp.T = 100;
    dgp.p = 100;
    dgp.rho = 0.0;
    dgp.seed = 7070;
    const auto data = generate(dgp);
    const auto z = augment(data.series, data.true_tail);
    FitConfig cfg;
    cfg.tolerance = 1e-9;
    const auto fit = fit_lasso(z, cfg);
    const double lambda = fit.penalty_used;
    const Vector grad = z.features.transpose() * (z.responses - z.features * fit.coefficients) /
                        z.T();
    int kkt_bad = 0;
    for (int j = 0; j < dgp.p; ++j) {
        if (fit.coefficients(j) == 0.0) {
            if (std::abs(grad(j)) > lambda / 2.0 + 1e-6) ++kkt_bad;
        } else {
            if (std::abs(grad(j) - std::copysign(lambda / 2.0, fit.coefficients(j))) > 1e-6)
                ++kkt_bad;
        }
    }
    report(7, "lasso soft-threshold closed form and KKT", bad == 0 && kkt_bad == 0,
           std::to_string(bad) + " closed-form misses, " + std::to_string(kkt_bad) +
               " KKT violations");
}

// ---- criterion 8: permutation invariance and fast path ----

void invariance_criterion() {
    Rng rng(808);
    AugmentedSeries z;
    z.features = random_matrix(12, 4, rng);
    z.responses = random_vector(12, rng);
    z.tail_len = 2;

    FitConfig ridge_cfg;
    ridge_cfg.penalty_weight = 0.2;
    FitConfig lasso_cfg;
    lasso_cfg.penalty_weight = 0.1;
    lasso_cfg.tolerance = 1e-12;

    const Vector beta_r = fit_ridge(z, ridge_cfg).coefficients;
    const Vector beta_o = fit_ridge(z, FitConfig{0.0}).coefficients;
    const Vector beta_l = fit_lasso(z, lasso_cfg).coefficients;
    double worst_r = 0.0, worst_l = 0.0;
    for (const auto& set : {make_nob(12, 3), make_cso(12)}) {
        for (const auto& pi : set.elements) {
            const auto zp = apply_permutation(z, pi);
            worst_r = std::max(worst_r,
                               (fit_ridge(zp, ridge_cfg).coefficients - beta_r)
                                   .cwiseAbs()
                                   .maxCoeff());
            worst_r = std::max(worst_r,
                               (fit_ridge(zp, FitConfig{0.0}).coefficients - beta_o)
                                   .cwiseAbs()
                                   .maxCoeff());
            worst_l = std::max(worst_l,
                               (fit_lasso(zp, lasso_cfg).coefficients - beta_l)
                                   .cwiseAbs()
                                   .maxCoeff());
        }
    }

    double worst_fast = 0.0;
    for (const auto& scorer :
         {make_regression_scorer(Method::Ridge, ridge_cfg),
          make_regression_scorer(Method::Lasso, lasso_cfg), make_oracle_scorer(beta_o)}) {
        for (const auto& set : {make_nob(12, 3), make_cso(12)}) {
            const auto fast = score_over_set(scorer, z, set);
            const auto naive = score_over_set(scorer, z, set, true);
            for (std::size_t i = 0; i < fast.size(); ++i)
                worst_fast = std::max(worst_fast, std::abs(fast[i] - naive[i]));
        }
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf), "ridge/ols dev %.2e, lasso dev %.2e, fast-path dev %.2e",
                  worst_r, worst_l, worst_fast);
    report(8, "estimator permutation invariance, fast path",
           worst_r < 1e-10 && worst_l < 1e-6 && worst_fast < 1e-9, buf);
}

// ---- criterion 9: ergodicity decay ----

void decay_criterion() {
    DecayConfig cfg;
    cfg.rho = 0.5;
    cfg.b = 1;
    const auto rows = ergodicity_decay_experiment(cfg, {100, 400, 1600}, 200, 909);
    const bool decreasing =
        rows[1].mean_gap < rows[0].mean_gap && rows[2].mean_gap < rows[1].mean_gap;
    const double ratio = rows[2].mean_gap / rows[0].mean_gap;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "gaps %.4f / %.4f / %.4f, ratio %.3f", rows[0].mean_gap,
                  rows[1].mean_gap, rows[2].mean_gap, ratio);
    report(9, "sup-CDF-gap decay under mixing", decreasing && ratio < 0.5, buf);
}

// ---- criterion 10: p-value distribution under the oracle score ----

void uniformity_criterion() {
    const int reps = 2000;
    const int T = 100;
    std::vector<double> pvals;
    pvals.reserve(reps);
    const auto pis = make_nob(T, 1);
    for (int r = 0; r < reps; ++r) {
        DgpConfig dgp;
        dgp.T = T;
        dgp.p = 10;
        dgp.rho = 0.0;
        dgp.seed = child_seed(1010, r);
        const auto data = generate(dgp);
        pvals.push_back(
            p_value(make_oracle_scorer(data.beta), data.series, data.true_tail, pis).value);
    }
    bool ok = true;
    std::string detail;
    for (double alpha : {0.05, 0.1, 0.2}) {
        int below = 0;
        for (double p : pvals)
            if (p <= alpha) ++below;
        const double frac = static_cast<double>(below) / reps;
        ok = ok && std::abs(frac - alpha) <= 0.03;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "P(p<=%.2f)=%.4f ", alpha, frac);
        detail += buf;
    }
    report(10, "oracle p-values approximately uniform", ok, detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite (coverage runs take a few minutes)\n");
    group_criterion();
    order_statistic_criterion();
    brute_force_criterion();
    lasso_criterion();
    invariance_criterion();
    decay_criterion();
    uniformity_criterion();
    coverage_criteria();
    std::printf("%s: %d failing criteria\n", g_failures == 0 ? "OK" : "FAILED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
