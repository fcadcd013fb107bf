#include "gci/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gci {

namespace {

void check_bijection(const std::vector<int>& map) {
    const int T = static_cast<int>(map.size());
    std::vector<char> seen(T, 0);
    for (int v : map) {
        if (v < 0 || v >= T || seen[v])
            throw ValidationError("mapping is not a bijection of {1,...,T}");
        seen[v] = 1;
    }
}

void dedup(std::vector<Permutation>& elems) {
    std::vector<Permutation> out;
    std::set<std::vector<int>> seen;
    for (auto& e : elems)
        if (seen.insert(e.map()).second) out.push_back(std::move(e));
    elems = std::move(out);
}

// Identity first, then the given rotation applied repeatedly.
Permutation block_rotation(int T, int fixed_prefix, int shift) {
    std::vector<int> map(T);
    const int m = T - fixed_prefix;
    for (int t = 0; t < fixed_prefix; ++t) map[t] = t;
    for (int t = 0; t < m; ++t) map[fixed_prefix + t] = fixed_prefix + (t + shift) % m;
    return Permutation(std::move(map));
}

}  // namespace

Permutation::Permutation(std::vector<int> zero_based_map) : map_(std::move(zero_based_map)) {
    check_bijection(map_);
}

Permutation Permutation::identity(int T) {
    if (T < 1) throw ValidationError("domain size must be positive");
    std::vector<int> map(T);
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(const std::vector<int>& map) {
    std::vector<int> zero(map.size());
    for (std::size_t t = 0; t < map.size(); ++t) zero[t] = map[t] - 1;
    return Permutation(std::move(zero));
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> out(map_.size());
    for (std::size_t t = 0; t < map_.size(); ++t) out[t] = map_[t] + 1;
    return out;
}

bool Permutation::is_identity() const {
    for (int t = 0; t < size(); ++t)
        if (map_[t] != t) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw DimensionError("composition of permutations with different domains");
    std::vector<int> out(map_.size());
    for (int t = 0; t < size(); ++t) out[t] = map_[other.map_[t]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(map_.size());
    for (int t = 0; t < size(); ++t) out[map_[t]] = t;
    return Permutation(std::move(out));
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::NOB: return "nob";
        case Scheme::CSO: return "cso";
        case Scheme::OB: return "ob";
        case Scheme::SPLIT: return "split";
    }
    return "?";
}

Scheme parse_scheme(const std::string& name) {
    if (name == "nob") return Scheme::NOB;
    if (name == "cso") return Scheme::CSO;
    if (name == "ob") return Scheme::OB;
    if (name == "split") return Scheme::SPLIT;
    throw ValidationError("unknown scheme: " + name);
}

PermutationSet make_nob(int T, int b, BlockPolicy policy) {
    if (T < 1 || b < 1) throw ValidationError("T and b must be positive");
    if (b > T) throw DimensionError("block size exceeds series length");
    int prefix = 0;
    if (T % b != 0) {
        if (policy == BlockPolicy::Strict)
            throw ValidationError("block size does not divide T (strict mode)");
        prefix = T % b;  // trim: fix the oldest T mod b indices
    }
    const int K = (T - prefix) / b;
    PermutationSet set;
    set.domain = T;
    set.scheme = Scheme::NOB;
    set.elements.reserve(K);
    for (int j = 0; j < K; ++j) set.elements.push_back(block_rotation(T, prefix, j * b));
    return set;
}

PermutationSet make_cso(int T) {
    if (T < 1) throw ValidationError("T must be positive");
    PermutationSet set;
    set.domain = T;
    set.scheme = Scheme::CSO;
    set.elements.reserve(T);
    for (int j = 0; j < T; ++j) set.elements.push_back(block_rotation(T, 0, j));
    return set;
}

PermutationSet make_ob(int T, int b, BlockPolicy policy) {
    const PermutationSet nob = make_nob(T, b, policy);
    const PermutationSet cso = make_cso(T);
    PermutationSet set;
    set.domain = T;
    set.scheme = Scheme::OB;
    set.elements.reserve(static_cast<std::size_t>(cso.size()) * nob.size());
    for (const auto& pc : cso.elements)
        for (const auto& pn : nob.elements) set.elements.push_back(pc.compose(pn));
    dedup(set.elements);
    // put the identity first, keep the rest in first-appearance order
    std::stable_partition(set.elements.begin(), set.elements.end(),
                          [](const Permutation& p) { return p.is_identity(); });
    if (T % b == 0) {
        // the composition collapses back to the full cyclic set
        std::set<std::vector<int>> ours, theirs;
        for (const auto& e : set.elements) ours.insert(e.map());
        for (const auto& e : cso.elements) theirs.insert(e.map());
        if (ours != theirs)
            throw NumericalError("overlapping-block composition failed to collapse to CSO");
    }
    return set;
}

PermutationSet make_split(int T, int t0, int calibration_start, int b) {
    if (calibration_start <= 1)
        throw ValidationError("training set must be non-empty (calibration_start > 1)");
    if (calibration_start > t0)
        throw ValidationError("calibration_start must lie within the observed history");
    const int m = T - calibration_start + 1;
    if (b < 1 || m % b != 0)
        throw ValidationError("block size must divide the calibration segment length");
    const int prefix = calibration_start - 1;
    const int K = m / b;
    PermutationSet set;
    set.domain = T;
    set.scheme = Scheme::SPLIT;
    set.elements.reserve(K);
    for (int j = 0; j < K; ++j) set.elements.push_back(block_rotation(T, prefix, j * b));
    return set;
}

bool verify_group(const PermutationSet& set) {
    std::set<std::vector<int>> members;
    for (const auto& e : set.elements) members.insert(e.map());
    if (members.size() != set.elements.size()) return false;  // duplicates
    bool has_identity = false;
    for (const auto& e : set.elements) has_identity |= e.is_identity();
    if (!has_identity) return false;
    for (const auto& e : set.elements)
        if (!members.count(e.inverse().map())) return false;
    for (const auto& a : set.elements)
        for (const auto& b : set.elements)
            if (!members.count(a.compose(b).map())) return false;
    return true;
}

}  // namespace gci
