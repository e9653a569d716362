#pragma once

#include <optional>

#include "bandwidth/backtrack.hpp"

namespace bandwidth {

/// Middle bucket choice: prefix and suffix capacity sums are each at most
/// half the total; among candidates the most even split wins, then the
/// lowest index.
struct SplitPlan {
    int split_index = 0;
    CapacityVector left_caps;   // buckets 0..split_index-1 (may be empty)
    CapacityVector right_caps;  // buckets split_index+1..k-1 (may be empty)
};

SplitPlan choose_split_index(const CapacityVector& c);

/// Test-visible counters for the divide-and-conquer search.
struct DcInstrumentation {
    long long x_candidates = 0;
    long long rejected_component_bound = 0;
    long long side_solves = 0;
};

/// Proposition-2-style decision: fill the split bucket with every X,
/// assign components of g minus X to the left or right side, and recurse
/// with pins forcing N(X) into the buckets adjacent to the split. Falls
/// back to the plain backtracking search once the vector has at most two
/// buckets or the subproblem has at most base_size vertices.
/// base_size < 0 means ceil(n/4) of this call's graph.
DecideResult decide_dc(const Graph& g, const CapacityVector& c, const PinConstraint& pins = {},
                       int base_size = -1, DcInstrumentation* instr = nullptr);

enum class WindowVerdict { at_most, at_least };

struct WindowDecision {
    WindowVerdict verdict = WindowVerdict::at_most;
    int bound = 0;  // 2*ell-1 for at_most, ell+1 for at_least
    std::optional<BucketArrangement> witness;
};

/// Decides whether the bandwidth of the connected graph g is at most
/// 2*ell-1 (with witness) or at least ell+1.
WindowDecision decide_bandwidth_window(const Graph& g, int ell, SearchStats* stats = nullptr);

}  // namespace bandwidth
