#pragma once

#include <map>
#include <optional>
#include <set>

#include "bandwidth/backtrack.hpp"

namespace bandwidth {

/// A filled stretch of buckets: hi == lo is a full bucket holding exactly
/// caps[lo] vertices; hi == lo+1 is a jointly full pair holding exactly
/// caps[lo]+caps[hi] vertices whose split between the two buckets is open.
struct FilledRegion {
    int lo = 0;
    int hi = 0;
    VertexSet vertices;
};

/// Partial placement where every bucket is full, part of a jointly full
/// pair, or empty.
struct PartialBucketArrangement {
    CapacityVector capacity;
    std::vector<FilledRegion> regions;  // sorted by lo, disjoint

    static PartialBucketArrangement single_full(const CapacityVector& c, int bucket, VertexSet x);
    static PartialBucketArrangement jointly_full(const CapacityVector& c, int lo, VertexSet x);

    VertexSet assigned() const;
    bool bucket_filled(int i) const;
    /// Length of the longest stretch of consecutive empty buckets.
    int max_empty_run() const;
    /// nullopt if the partial satisfies its invariants on g (region sizes,
    /// disjointness, and per-edge bucket locality with joint membership
    /// counting as either bucket).
    std::optional<std::string> validate(const Graph& g) const;
};

/// Memo key of the completion DP: components consumed plus the occupancy
/// registers of the empty runs (s for a lone empty bucket; t, x_lo, x_hi
/// for an empty pair).
struct DpState {
    int p = 0;
    std::vector<int> regs;
    auto operator<=>(const DpState&) const = default;
};

struct DpStats {
    long long max_memo_states = 0;
    long long transitions = 0;
};

struct DpResult {
    bool extendable = false;
    std::optional<BucketArrangement> witness;
};

/// Decides whether the partial placement extends to a full C-bucket
/// arrangement of g. Requires no 3 consecutive empty buckets. Splits of
/// jointly full pairs are enumerated explicitly; the remainder is a
/// count-indexed DP over the components of the unassigned vertices, with
/// the memo bounded by n^(2k) states.
DpResult dp_extendable(const Graph& g, const PartialBucketArrangement& partial,
                       const PinConstraint& pins = {}, DpStats* stats = nullptr,
                       SearchStats* search = nullptr);

using ResidualVector = std::vector<int>;
using ProducedVectorSet = std::set<ResidualVector>;

/// All residual capacity vectors produced by partial arrangements that fix
/// x in bucket j and place every small component (at most floor(sqrt(n))
/// vertices) of g minus x. Components are processed one at a time, each
/// extending the running residual set, deduplicating as it goes.
ProducedVectorSet enumerate_produced_vectors(const Graph& g, const CapacityVector& c, int j,
                                             const VertexSet& x, SearchStats* stats = nullptr);

/// Per-k strategy decision for 3 <= k <= 26: fill the middle bucket (or the
/// (2,3) pair for six buckets, or the far end for three), enumerate the
/// produced vectors of the small components, branch large components to the
/// sides, and recurse until the completion DP applies.
std::optional<BucketArrangement> decide_constant_k(const Graph& g, const CapacityVector& c,
                                                   SearchStats* stats = nullptr);

/// Full 2-approximation driver. Per connected component, finds the smallest
/// ell whose (n_i,ell)-capacity vector is feasible, dispatching on
/// k = ceil(n_i/ell): trivial for k <= 2, per-k strategies for 3..26
/// (left-packed vectors for k in {8,10,12}, balanced otherwise), divide and
/// conquer for k >= 27. Reports lower = max ell_i and upper = 2*max ell_i - 1.
ApproxResult approx2_fast(const Graph& g, SearchStats* stats = nullptr);

}  // namespace bandwidth
