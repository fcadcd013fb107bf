#ifndef GCI_HARNESS_HPP
#define GCI_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gci/dgp.hpp"
#include "gci/inference.hpp"

namespace gci {

struct CoverageSettings {
    std::vector<int> T_list = {100};       // total lengths, T1 included
    std::vector<double> rho_list = {0.0};
    int replications = 500;
    double alpha = 0.1;
    int H = 100;
    double width_multiplier = 5.0;
    int p = 100;
    int active_count = 5;
    double beta_norm = 2.0;
    Scheme scheme = Scheme::NOB;
    int block_size = 1;
    Method estimator = Method::Lasso;
    std::uint64_t seed = 20240901;
};

struct CoverageRow {
    int T = 0;
    double rho = 0.0;
    double coverage = 0.0;      // covered / replications
    double mean_length = 0.0;   // mean hull length over replications
    int replications = 0;
    double mc_standard_error = 0.0;
    int grid_miss = 0;          // true tail outside grid bounds
    int empty_sets = 0;
};

/// Replicated generate -> predict -> check-hull loop over every (T, rho) pair.
/// Child seeds are derived per replication index, so results do not depend on
/// evaluation order.
std::vector<CoverageRow> run_coverage(const CoverageSettings& settings);

void write_coverage_csv(const std::string& path, const std::vector<CoverageRow>& rows,
                        const std::string& config_comment = "");

PermutationSet make_scheme_set(Scheme scheme, int T, int t0, int b);

}  // namespace gci

#endif
