#ifndef GCI_PERMUTATIONS_HPP
#define GCI_PERMUTATIONS_HPP

#include <string>
#include <vector>

#include "gci/errors.hpp"

namespace gci {

/// Bijection on {0,...,T-1}. Construction helpers accept the 1-based
/// convention used in block-permutation formulas.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> zero_based_map);

    static Permutation identity(int T);
    static Permutation from_one_based(const std::vector<int>& map);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int t) const { return map_[t]; }
    const std::vector<int>& map() const { return map_; }
    std::vector<int> one_based() const;

    bool is_identity() const;

    /// (a.compose(b))(t) = a(b(t))
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.map_ == b.map_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.map_ < b.map_;
    }

private:
    std::vector<int> map_;
};

enum class Scheme { NOB, CSO, OB, SPLIT };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

struct PermutationSet {
    std::vector<Permutation> elements;  // element 0 is the identity
    int domain = 0;
    Scheme scheme = Scheme::NOB;

    int size() const { return static_cast<int>(elements.size()); }
};

/// Policy for block sizes that do not divide T: Strict raises, Trim fixes the
/// oldest T mod b indices pointwise and rotates blocks on the remainder.
enum class BlockPolicy { Strict, Trim };

/// K = T/b cyclic whole-block rotations; element j (1-based) shifts by (j-1)b.
PermutationSet make_nob(int T, int b, BlockPolicy policy = BlockPolicy::Strict);

/// T cyclic single-step rotations.
PermutationSet make_cso(int T);

/// Materializes all CSO∘NOB compositions, deduplicates, and asserts the
/// result coincides with the CSO set.
PermutationSet make_ob(int T, int b, BlockPolicy policy = BlockPolicy::Strict);

/// Fixes {1,...,calibration_start-1} pointwise (1-based) and rotates NOB
/// blocks on the calibration suffix.
PermutationSet make_split(int T, int t0, int calibration_start, int b);

/// Brute-force group axioms: identity, closure, inverses. Intended for small T.
bool verify_group(const PermutationSet& set);

}  // namespace gci

#endif
