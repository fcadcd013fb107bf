#include "gci/harness.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "gci/rng.hpp"

namespace gci {

namespace {

std::uint64_t setting_seed(std::uint64_t master, int T, double rho) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &rho, sizeof(double));
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(T)) ^ bits);
}

}  // namespace

PermutationSet make_scheme_set(Scheme scheme, int T, int t0, int b) {
    switch (scheme) {
        case Scheme::NOB: return make_nob(T, b);
        case Scheme::CSO: return make_cso(T);
        case Scheme::OB: return make_ob(T, b);
        case Scheme::SPLIT: {
            // calibrate on (roughly) the second half of the history
            int cs = std::max(2, t0 / 2 + 1);
            while (cs >= 2 && (T - cs + 1) % b != 0) --cs;
            if (cs < 2) throw ValidationError("no feasible calibration split for this block size");
            return make_split(T, t0, cs, b);
        }
    }
    throw ValidationError("unknown scheme");
}

std::vector<CoverageRow> run_coverage(const CoverageSettings& s) {
    if (s.replications < 1) throw ValidationError("need at least one replication");
    std::vector<CoverageRow> rows;
    for (int T : s.T_list) {
        for (double rho : s.rho_list) {
            const std::uint64_t base = setting_seed(s.seed, T, rho);
            int covered = 0, grid_miss = 0, empty_sets = 0;
            double length_sum = 0.0;
            for (int r = 0; r < s.replications; ++r) {
                const std::uint64_t rep_seed = child_seed(base, static_cast<std::uint64_t>(r));
                try {
                    DgpConfig dgp;
                    dgp.T = T;
                    dgp.p = s.p;
                    dgp.rho = rho;
                    dgp.beta_norm = s.beta_norm;
                    dgp.active_count = s.active_count;
                    dgp.seed = rep_seed;
                    dgp.T1 = 1;
                    const GeneratedData data = generate(dgp);

                    ConformityScorer scorer = make_regression_scorer(s.estimator);
                    if (s.estimator == Method::Lasso)
                        scorer.lasso_warm_cache = std::make_shared<Vector>();

                    const CandidateGrid grid =
                        build_grid(data.series, scorer, s.H, s.width_multiplier);
                    const PermutationSet pis =
                        make_scheme_set(s.scheme, T, data.series.t0, s.block_size);
                    const PredictionSet ps =
                        prediction_set(data.series, scorer, pis, grid, s.alpha);

                    length_sum += ps.interval_length();
                    if (!ps.interval) ++empty_sets;
                    const double y_true = data.true_tail(0);
                    if (y_true < grid.points(0, 0) || y_true > grid.points(grid.size() - 1, 0)) {
                        ++grid_miss;  // outside the grid counts as non-covered
                    } else if (ps.interval && ps.interval->first <= y_true &&
                               y_true <= ps.interval->second) {
                        ++covered;
                    }
                } catch (const Error& e) {
                    throw Error("replication " + std::to_string(r + 1) + " (seed " +
                                std::to_string(rep_seed) + "): " + e.what());
                }
            }
            CoverageRow row;
            row.T = T;
            row.rho = rho;
            row.replications = s.replications;
            row.coverage = static_cast<double>(covered) / s.replications;
            row.mean_length = length_sum / s.replications;
            row.mc_standard_error =
                std::sqrt(row.coverage * (1.0 - row.coverage) / s.replications);
            row.grid_miss = grid_miss;
            row.empty_sets = empty_sets;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_coverage_csv(const std::string& path, const std::vector<CoverageRow>& rows,
                        const std::string& config_comment) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    if (!config_comment.empty()) out << "# " << config_comment << "\n";
    out << "T,rho,empirical_coverage,mean_length,replications,mc_standard_error,"
           "grid_miss,empty_sets\n";
    out.precision(17);
    for (const auto& r : rows)
        out << r.T << "," << r.rho << "," << r.coverage << "," << r.mean_length << ","
            << r.replications << "," << r.mc_standard_error << "," << r.grid_miss << ","
            << r.empty_sets << "\n";
}

}  // namespace gci
