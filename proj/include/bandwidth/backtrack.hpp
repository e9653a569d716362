#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "bandwidth/arrangement.hpp"
#include "bandwidth/graph.hpp"

namespace bandwidth {

/// Partial map vertex -> required bucket (0-based); -1 means unpinned.
struct PinConstraint {
    std::vector<int> pin_of;

    bool pinned(int v) const
    {
        return v < static_cast<int>(pin_of.size()) && pin_of[v] >= 0;
    }
    int pin(int v) const { return pin_of[v]; }
    void set(int v, int bucket)
    {
        if (v >= static_cast<int>(pin_of.size()))
            pin_of.resize(v + 1, -1);
        pin_of[v] = bucket;
    }
    bool any() const
    {
        for (int p : pin_of)
            if (p >= 0)
                return true;
        return false;
    }
    int lowest_pinned() const
    {
        for (int v = 0; v < static_cast<int>(pin_of.size()); ++v)
            if (pin_of[v] >= 0)
                return v;
        return -1;
    }
};

struct SearchStats {
    long long nodes_visited = 0;
    int max_depth = 0;

    void absorb(const SearchStats& other)
    {
        nodes_visited += other.nodes_visited;
        max_depth = std::max(max_depth, other.max_depth);
    }
};

/// Inclusive per-vertex bucket window; the enumerator only places v into
/// buckets within [lo, hi]. An empty vector means no restriction.
using BucketWindows = std::vector<std::pair<int, int>>;

/// Visits every complete placement of the connected graph g into the
/// residual capacities (entries may be 0), branching from root and then
/// always extending a vertex adjacent to an assigned one (most assigned
/// neighbors first, ties by lowest id). Buckets are tried in ascending
/// order, so placements arrive in a fixed deterministic order. The visit
/// callback returns false to stop; the function returns false iff stopped.
bool for_each_arrangement(const Graph& g, std::span<const int> residual, int root,
                          const BucketWindows& windows,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          SearchStats& stats);

struct DecideResult {
    std::optional<BucketArrangement> arrangement;
    SearchStats stats;
};

/// Backtracking feasibility decision for a C-bucket arrangement of a
/// connected graph, honoring pins. The root (lowest id, or lowest pinned
/// id when pins exist) is tried in every bucket; every other vertex gets
/// at most the three buckets adjacent to its assigned neighbors.
DecideResult decide_backtrack(const Graph& g, const CapacityVector& c,
                              const PinConstraint& pins = {});

/// Smallest ell in 1..ceil(n/2) whose balanced (n,ell)-capacity vector is
/// feasible; reports bandwidth bounds [ell*, 2*ell*-1] and the witness.
ApproxResult approx2_backtrack(const Graph& g, SearchStats* stats = nullptr);

}  // namespace bandwidth
