#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandwidth/graph.hpp"

namespace bandwidth {

/// Bijection vertex -> rank in 1..n.
struct LinearArrangement {
    std::vector<int> rank_of;

    int n() const { return static_cast<int>(rank_of.size()); }
    static LinearArrangement identity(int n);
    /// Vertices sorted by rank.
    std::vector<int> order() const;
    bool is_valid() const;
};

enum class VectorStyle { balanced, left_packed };

/// Ordered bucket capacities, all >= 1. Bucket indices are 0-based in code.
class CapacityVector {
public:
    CapacityVector() = default;
    explicit CapacityVector(std::vector<int> caps);

    int length() const { return static_cast<int>(caps_.size()); }
    int size() const;                            // sum of capacities
    int operator[](int i) const { return caps_[i]; }
    std::span<const int> caps() const { return caps_; }
    /// Buckets lo..hi inclusive.
    CapacityVector slice(int lo, int hi) const;

    bool operator==(const CapacityVector& other) const = default;

private:
    std::vector<int> caps_;
};

/// The (n,ell)-capacity vector of the given style: k = ceil(n/ell) buckets,
/// interior capacities ell, end capacities a (first) and b (last) with
/// a+b = n-(k-2)*ell; left_packed forces a = ell, balanced splits evenly
/// with a >= b. Requires 1 <= ell <= ceil(n/2).
CapacityVector make_capacity_vector(int n, int ell, VectorStyle style);

/// Total map vertex -> bucket (0-based) meeting the capacities exactly,
/// with every edge inside one bucket or two consecutive ones.
struct BucketArrangement {
    std::vector<int> bucket_of;
    CapacityVector capacity;
};

struct ApproxResult {
    int ell_star = 0;  // smallest ell with a feasible (n,ell)-capacity vector
    int lower = 0;     // ell_star, or 0 for edgeless graphs
    int upper = 0;     // 2*ell_star - 1 (the reported bandwidth)
    std::optional<BucketArrangement> witness;
};

/// Max edge stretch |rank(u)-rank(v)|; 0 for edgeless graphs.
int arrangement_bandwidth(const Graph& g, const LinearArrangement& l);

/// Ranks ordered by bucket, ties by ascending vertex id. The result has
/// bandwidth at most 2*max(caps)-1 when b is valid.
LinearArrangement arrangement_from_buckets(const Graph& g, const BucketArrangement& b);

/// Cut the arrangement into consecutive groups of caps[0], caps[1], ...
/// vertices. violation describes the first broken constraint, if any.
struct BucketingResult {
    BucketArrangement arrangement;
    std::optional<std::string> violation;
};
BucketingResult buckets_from_arrangement(const Graph& g, const LinearArrangement& l,
                                         const CapacityVector& c);

/// nullopt if valid, else a description of the first violated constraint.
std::optional<std::string> validate_bucket_arrangement(const Graph& g,
                                                       const BucketArrangement& b);

struct ExactResult {
    int bandwidth = 0;
    LinearArrangement arrangement;
    long long nodes = 0;
};

/// Exact minimum bandwidth by branch-and-bound over position prefixes.
/// Refuses graphs with more than cap vertices.
ExactResult exact_bandwidth(const Graph& g, int cap = 12);

}  // namespace bandwidth
