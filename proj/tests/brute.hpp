#pragma once

#include <set>
#include <vector>

#include "bandwidth/backtrack.hpp"
#include "bandwidth/graph.hpp"

// Exhaustive reference implementations. Deliberately brute force and
// independent of the library's search/DP code paths.
namespace brute {

// minimum bandwidth over all n! arrangements (keep n small)
int min_bandwidth(const bandwidth::Graph& g);

// does any assignment vertex -> bucket respecting capacities, windows and
// edge locality exist? plain DFS over vertices in id order
bool exists_assignment(const bandwidth::Graph& g, const std::vector<int>& caps,
                       const bandwidth::BucketWindows& windows = {});

// can the partial assignment (fixed[v] == -1 for unassigned, jointly full
// pairs listed separately with their bucket spans) be completed? windows,
// when nonempty, restrict every vertex including the pair members
bool completable(const bandwidth::Graph& g, const std::vector<int>& caps,
                 std::vector<int> fixed,
                 const std::vector<std::pair<int, bandwidth::VertexSet>>& pairs,
                 const bandwidth::BucketWindows& windows = {});

// residual capacity vectors over all placements of x into bucket j plus all
// small components (size <= floor(sqrt(n))) of g minus x
std::set<std::vector<int>> residual_set(const bandwidth::Graph& g, const std::vector<int>& caps,
                                        int j, const bandwidth::VertexSet& x);

}  // namespace brute
