#ifndef GCI_INFERENCE_HPP
#define GCI_INFERENCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gci/scores.hpp"

namespace gci {

struct PValue {
    double value = 1.0;  // in {1/n, ..., 1}
    int n = 1;
    int tie_count = 1;  // permutations scoring exactly S(Z), identity included
};

struct CandidateGrid {
    Matrix points;  // H x T1, rows ascending for T1 = 1
    Vector center;
    double half_width = 0.0;

    int size() const { return static_cast<int>(points.rows()); }
    int tail_len() const { return static_cast<int>(points.cols()); }
};

struct PredictionSet {
    CandidateGrid grid;
    std::vector<double> pvalues;
    std::vector<bool> retained;  // retained[h] <=> pvalues[h] > alpha
    double alpha = 0.1;
    // convex hull of retained points, T1 = 1 only
    std::optional<std::pair<double, double>> interval;
    bool boundary_touch = false;   // a retained point sits on the grid edge
    bool contiguous = true;        // retained indices form one run

    int retained_count() const;
    double interval_length() const;
};

/// Fraction of permutations with S(Z^pi) >= S(Z); ties count toward the
/// p-value, so the identity guarantees a floor of 1/n.
PValue p_value(const ConformityScorer& scorer, const ObservedSeries& series,
               const Vector& candidate, const PermutationSet& pis);

/// Order-statistic rank k with 1{p_hat <= alpha} = 1{S(Z) > S^(k)(Z)}.
int rank_threshold(double alpha, int n);

/// Equally spaced candidates around the training-only point prediction;
/// half width = width_multiplier * sd of training residuals. T1 = 1 only.
CandidateGrid build_grid(const ObservedSeries& series, const ConformityScorer& scorer,
                         int H, double width_multiplier = 5.0);

CandidateGrid make_grid(Vector center, double half_width, int H);

/// Algorithm: test every grid row, keep those with p-value above alpha.
PredictionSet prediction_set(const ObservedSeries& series, const ConformityScorer& scorer,
                             const PermutationSet& pis, const CandidateGrid& grid,
                             double alpha);

void write_prediction_csv(const std::string& path, const PredictionSet& set,
                          const std::string& config_comment = "");

}  // namespace gci

#endif
