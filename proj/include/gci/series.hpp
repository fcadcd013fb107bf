#ifndef GCI_SERIES_HPP
#define GCI_SERIES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gci/errors.hpp"
#include "gci/permutations.hpp"

namespace gci {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Observed history plus future feature rows. The first t0 rows of `features`
/// are paired with `responses`; the last t1 rows are the features of the
/// responses we want to predict.
struct ObservedSeries {
    Vector responses;  // length t0
    Matrix features;   // (t0 + t1) x p
    int t0 = 0;
    int t1 = 0;

    int T() const { return t0 + t1; }
    int p() const { return static_cast<int>(features.cols()); }
};

ObservedSeries make_observed_series(Vector responses, Matrix features, int t1);

/// Observed responses joined with a hypothesized tail, features unchanged.
/// tail_len is preserved under permutation; tail() reads back whatever
/// responses currently sit in the last tail_len positions.
struct AugmentedSeries {
    Vector responses;  // length T
    Matrix features;   // T x p
    int tail_len = 0;

    int T() const { return static_cast<int>(responses.size()); }
    int t0() const { return T() - tail_len; }
    int p() const { return static_cast<int>(features.cols()); }
    Vector tail() const { return responses.tail(tail_len); }
};

AugmentedSeries augment(const ObservedSeries& series, const Vector& candidate);

/// Jointly permutes (response, feature-row) pairs: output position t holds
/// input position pi(t).
AugmentedSeries apply_permutation(const AugmentedSeries& z, const Permutation& pi);

/// CSV with header `t,y,x1,...,xp`. Rows with an empty `y` field are the
/// future feature rows and must be the final t1 rows; `t` must run 1..T.
ObservedSeries read_series_csv(const std::string& path);
void write_series_csv(const std::string& path, const ObservedSeries& series,
                      const std::string& config_comment = "");

}  // namespace gci

#endif
