// Command-line driver: single prediction runs, coverage studies, and the
// ergodicity decay study, all emitting plot-ready CSV.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gci/diagnostics.hpp"
#include "gci/harness.hpp"

namespace {

using namespace gci;

Method parse_estimator(const std::string& name) {
    if (name == "lasso") return Method::Lasso;
    if (name == "ridge") return Method::Ridge;
    if (name == "ols") return Method::Ols;
    if (name == "ar") return Method::ArOls;
    throw ValidationError("unknown estimator: " + name);
}

std::string join(const std::vector<double>& v) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    return ss.str();
}

std::string join(const std::vector<int>& v) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    return ss.str();
}

struct PredictOpts {
    std::string input;
    std::string out = "predict.csv";
    int T = 100, p = 20;
    int active = 0;  // 0: min(5, p)
    double rho = 0.0;
    std::uint64_t seed = 1;
    std::string scheme = "nob";
    int block_size = 1;
    std::string estimator = "lasso";
    int lag = 1;
    double alpha = 0.1;
    int H = 100;
    double width_multiplier = 5.0;
    double ridge_penalty = 0.1;
};

int run_predict(const PredictOpts& o) {
    ObservedSeries series;
    if (!o.input.empty()) {
        series = read_series_csv(o.input);
    } else {
        DgpConfig dgp;
        dgp.T = o.T;
        dgp.p = o.p;
        dgp.rho = o.rho;
        dgp.seed = o.seed;
        dgp.active_count = o.active > 0 ? o.active : std::min(5, o.p);
        series = generate(dgp).series;
    }

    ConformityScorer scorer;
    const Method est = parse_estimator(o.estimator);
    if (est == Method::ArOls) {
        scorer = make_ar_scorer(o.lag);
    } else {
        scorer = make_regression_scorer(est);
        if (est == Method::Ridge) scorer.config.penalty_weight = o.ridge_penalty;
        if (est == Method::Lasso) scorer.lasso_warm_cache = std::make_shared<Vector>();
    }

    const PermutationSet pis =
        make_scheme_set(parse_scheme(o.scheme), series.T(), series.t0, o.block_size);
    const CandidateGrid grid = build_grid(series, scorer, o.H, o.width_multiplier);
    const PredictionSet set = prediction_set(series, scorer, pis, grid, o.alpha);

    std::ostringstream cfg;
    cfg << "cmd=predict scheme=" << o.scheme << " block_size=" << o.block_size
        << " estimator=" << o.estimator << " alpha=" << o.alpha << " H=" << o.H
        << " n=" << pis.size() << " seed=" << o.seed;
    write_prediction_csv(o.out, set, cfg.str());

    if (set.interval) {
        std::printf("interval [%.6g, %.6g] length %.6g alpha=%g n=%d scheme=%s\n",
                    set.interval->first, set.interval->second, set.interval_length(),
                    o.alpha, pis.size(), o.scheme.c_str());
        if (!set.contiguous) std::printf("warning: retained set is non-contiguous\n");
        if (set.boundary_touch)
            std::printf("warning: retained set touches the grid boundary; widen the grid\n");
    } else {
        std::printf("empty prediction set at alpha=%g (n=%d)\n", o.alpha, pis.size());
    }
    std::printf("wrote %s\n", o.out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized conformal inference for time series"};
    app.require_subcommand(1);

    // ---- predict ----
    PredictOpts po;
    auto* predict = app.add_subcommand("predict", "one prediction-set run");
    predict->set_config("--config");
    predict->add_option("--input", po.input, "input series CSV (t,y,x1,...,xp)");
    predict->add_option("--out", po.out, "output CSV path");
    predict->add_option("--T", po.T, "series length incl. future point (DGP mode)");
    predict->add_option("--p", po.p, "feature count (DGP mode)");
    predict->add_option("--active", po.active, "nonzero coefficients (DGP mode, default min(5,p))");
    predict->add_option("--rho", po.rho, "error AR(1) coefficient (DGP mode)");
    predict->add_option("--seed", po.seed, "RNG seed (DGP mode)");
    predict->add_option("--scheme", po.scheme, "nob|cso|ob|split");
    predict->add_option("--block-size", po.block_size, "block size b");
    predict->add_option("--estimator", po.estimator, "lasso|ridge|ols|ar");
    predict->add_option("--lag", po.lag, "AR lag order");
    predict->add_option("--alpha", po.alpha, "miscoverage level");
    predict->add_option("--grid-points", po.H, "grid size H");
    predict->add_option("--width-multiplier", po.width_multiplier, "grid half-width in residual sds");
    predict->add_option("--ridge-penalty", po.ridge_penalty, "ridge penalty weight");

    // ---- coverage ----
    CoverageSettings cs;
    std::string cov_out = "coverage.csv";
    std::string cov_scheme = "nob", cov_estimator = "lasso";
    bool full = false;
    auto* coverage = app.add_subcommand("coverage", "replicated coverage/length study");
    coverage->set_config("--config");
    coverage->add_option("--T-list", cs.T_list, "series lengths")->delimiter(',');
    coverage->add_option("--rho-list", cs.rho_list, "error AR(1) coefficients")->delimiter(',');
    coverage->add_option("--replications", cs.replications, "Monte Carlo replications");
    coverage->add_option("--alpha", cs.alpha, "miscoverage level");
    coverage->add_option("--grid-points", cs.H, "grid size H");
    coverage->add_option("--width-multiplier", cs.width_multiplier, "grid half-width in sds");
    coverage->add_option("--p", cs.p, "feature count");
    coverage->add_option("--scheme", cov_scheme, "nob|cso|ob|split");
    coverage->add_option("--block-size", cs.block_size, "block size b");
    coverage->add_option("--estimator", cov_estimator, "lasso|ridge|ols");
    coverage->add_option("--seed", cs.seed, "master seed");
    coverage->add_option("--out", cov_out, "output CSV path");
    coverage->add_flag("--full", full, "paper-scale run: 2000 replications, T in {100,200}");

    // ---- ergodicity ----
    DecayConfig dc;
    std::vector<int> K_list = {100, 400, 1600};
    int erg_reps = 200;
    std::uint64_t erg_seed = 7;
    std::string erg_out = "ergodicity.csv";
    bool constant_process = false;
    double constant_value = 1.0;
    auto* ergodicity = app.add_subcommand("ergodicity", "sup-CDF-gap decay study");
    ergodicity->set_config("--config");
    ergodicity->add_option("--rho", dc.rho, "AR(1) coefficient of the error process");
    ergodicity->add_option("--block-size", dc.b, "block size b");
    ergodicity->add_option("--K-list", K_list, "block counts")->delimiter(',');
    ergodicity->add_option("--replications", erg_reps, "replications per K");
    ergodicity->add_option("--seed", erg_seed, "master seed");
    ergodicity->add_option("--out", erg_out, "output CSV path");
    ergodicity->add_flag("--constant", constant_process, "degenerate constant process");
    ergodicity->add_option("--constant-value", constant_value, "value of the constant process");

    // ---- simulate ----
    DgpConfig sim;
    std::string sim_out = "series.csv";
    auto* simulate = app.add_subcommand("simulate", "dump a synthetic series to CSV");
    simulate->set_config("--config");
    simulate->add_option("--T", sim.T, "series length incl. future rows");
    simulate->add_option("--T1", sim.T1, "future rows");
    simulate->add_option("--p", sim.p, "feature count");
    auto* sim_active = simulate->add_option("--active", sim.active_count, "nonzero coefficients");
    simulate->add_option("--rho", sim.rho, "error AR(1) coefficient");
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--out", sim_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (predict->parsed()) return run_predict(po);

        if (coverage->parsed()) {
            if (full) {
                cs.replications = 2000;
                cs.T_list = {100, 200};
            }
            cs.scheme = parse_scheme(cov_scheme);
            cs.estimator = parse_estimator(cov_estimator);
            const auto rows = run_coverage(cs);
            std::ostringstream cfg;
            cfg << "cmd=coverage T_list=" << join(cs.T_list) << " rho_list=" << join(cs.rho_list)
                << " replications=" << cs.replications << " alpha=" << cs.alpha
                << " H=" << cs.H << " p=" << cs.p << " scheme=" << cov_scheme
                << " block_size=" << cs.block_size << " estimator=" << cov_estimator
                << " seed=" << cs.seed;
            write_coverage_csv(cov_out, rows, cfg.str());
            for (const auto& r : rows)
                std::printf("T=%d rho=%.3g coverage=%.4f mean_length=%.4f (se=%.4f, miss=%d)\n",
                            r.T, r.rho, r.coverage, r.mean_length, r.mc_standard_error,
                            r.grid_miss);
            std::printf("wrote %s\n", cov_out.c_str());
            return 0;
        }

        if (ergodicity->parsed()) {
            dc.process = constant_process ? DecayProcess::Constant : DecayProcess::Ar1Gaussian;
            dc.constant_value = constant_value;
            const auto rows = ergodicity_decay_experiment(dc, K_list, erg_reps, erg_seed);
            std::ostringstream cfg;
            cfg << "cmd=ergodicity rho=" << dc.rho << " b=" << dc.b
                << " K_list=" << join(K_list) << " replications=" << erg_reps
                << " seed=" << erg_seed
                << " process=" << (constant_process ? "constant" : "ar1");
            write_decay_csv(erg_out, rows, cfg.str());
            for (const auto& r : rows)
                std::printf("K=%d mean_gap=%.5f sd=%.5f\n", r.K, r.mean_gap, r.sd_gap);
            std::printf("wrote %s\n", erg_out.c_str());
            return 0;
        }

        if (simulate->parsed()) {
            if (sim_active->empty()) sim.active_count = std::min(5, sim.p);
            const GeneratedData data = generate(sim);
            std::ostringstream cfg;
            cfg << "cmd=simulate T=" << sim.T << " T1=" << sim.T1 << " p=" << sim.p
                << " rho=" << sim.rho << " seed=" << sim.seed;
            write_series_csv(sim_out, data.series, cfg.str());
            std::printf("wrote %s\n", sim_out.c_str());
            return 0;
        }
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
