#ifndef GCI_DGP_HPP
#define GCI_DGP_HPP

#include <cstdint>

#include "gci/series.hpp"

namespace gci {

/// Sparse linear model with Gaussian features and AR(1) errors started at
/// eps_0 = 0 with innovation variance 1 - rho^2.
struct DgpConfig {
    int T = 101;  // total length, history plus tail
    int p = 100;
    double rho = 0.0;
    double beta_norm = 2.0;
    int active_count = 5;
    std::uint64_t seed = 0;
    int T1 = 1;
};

struct GeneratedData {
    ObservedSeries series;
    Vector true_tail;  // length T1, the coverage target
    Vector beta;
    Vector errors;  // length T
};

GeneratedData generate(const DgpConfig& cfg);

/// Stationary AR(K) response process with Gaussian innovations; 500 burn-in
/// steps from zero initial conditions. Rejects non-stationary coefficients.
Vector generate_ar_response(const Vector& rho_vec, int T, double innovation_sd,
                            std::uint64_t seed);

}  // namespace gci

#endif
