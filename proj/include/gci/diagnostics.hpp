#ifndef GCI_DIAGNOSTICS_HPP
#define GCI_DIAGNOSTICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "gci/scores.hpp"

namespace gci {

/// Empirical CDF of the permutation scores with the strict-less-than
/// convention: F(x) = #{scores < x} / n.
struct RandomizationCdf {
    std::vector<double> sorted_scores;

    double operator()(double x) const;
    int n() const { return static_cast<int>(sorted_scores.size()); }
};

RandomizationCdf randomization_cdf(const ConformityScorer& scorer,
                                   const AugmentedSeries& z,
                                   const PermutationSet& pis);

/// sup_x |F_tilde(x) - F(x)|, evaluated exactly from both sides of every jump.
double sup_cdf_gap(const RandomizationCdf& cdf,
                   const std::function<double(double)>& reference);

struct ConditionAReport {
    double mse = 0.0;             // (1/n) sum over pi of (S - S_*)^2
    double pointwise_error = 0.0; // |S(Z) - S_*(Z)| at the identity
    int n = 0;
};

ConditionAReport condition_a_report(const ConformityScorer& scorer,
                                    const ConformityScorer& oracle,
                                    const AugmentedSeries& z,
                                    const PermutationSet& pis);

enum class DecayProcess { Ar1Gaussian, Constant };

/// Stationary process whose oracle-score marginal is known in closed form.
/// Ar1Gaussian with b = 1 and norm power 1 has a half-normal marginal; any
/// other configuration needs a user-supplied reference CDF.
struct DecayConfig {
    DecayProcess process = DecayProcess::Ar1Gaussian;
    double rho = 0.5;
    int b = 1;
    double constant_value = 0.0;  // Constant process only
    std::function<double(double)> reference;  // overrides the built-in CDF
};

struct DecayRow {
    int K = 0;
    double mean_gap = 0.0;
    double sd_gap = 0.0;
    int replications = 0;
};

std::vector<DecayRow> ergodicity_decay_experiment(const DecayConfig& cfg,
                                                  const std::vector<int>& K_list,
                                                  int replications,
                                                  std::uint64_t seed);

void write_decay_csv(const std::string& path, const std::vector<DecayRow>& rows,
                     const std::string& config_comment = "");

/// Half-normal CDF, the |N(0,1)| marginal.
double half_normal_cdf(double x);

}  // namespace gci

#endif
