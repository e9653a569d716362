#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bandwidth {

/// Thrown by parse_graph; line is 1-based within the input text.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line)
    {
    }
};

/// Thrown when an instance exceeds a configured size cap (exact oracle).
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built
/// (construct, add_edge, then share freely).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    // rejects self-loops, duplicates and out-of-range endpoints
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;        // sorted neighbor lists
    std::vector<std::pair<int, int>> edges_;   // u < v, sorted
};

struct ComponentSplit {
    std::vector<VertexSet> small;  // components with <= threshold vertices
    std::vector<VertexSet> large;  // components with  > threshold vertices
};

/// Result of induced_subgraph: new ids are 0..|x|-1 in ascending order of
/// the original ids, so to_sub is the old->new map and orig_of its inverse.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;    // size g.n(), -1 where absent
    std::vector<int> orig_of;   // size |x|
};

// Components sorted by smallest contained vertex; each set ascending.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// (union of N(v) for v in x) minus x
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// Components of g minus x, partitioned by size against threshold.
ComponentSplit split_small_large(const Graph& g, const VertexSet& x, int threshold);

// --- instance generators ------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);          // n >= 3
Graph make_complete(int n);
Graph make_star(int leaves);      // K_{1,leaves}: center 0, leaves 1..leaves
// Spine path of n vertices, a pendant path of hair_len vertices on each.
Graph make_caterpillar(int n, int hair_len);
// P_n plus an edge between every pair at path distance <= b (1 <= b < n).
Graph make_path_power(int n, int b);
// Erdos-Renyi draw, then repeatedly add one uniformly random edge between
// distinct components until connected. Deterministic in (n, p, seed).
Graph make_random_connected(int n, double p, std::uint64_t seed);

struct GenParams {
    int n = 0;
    int b = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

/// families: path, cycle, complete, star, caterpillar, path_power, random_connected
Graph generate(const std::string& family, const GenParams& params);

// --- text format ----------------------------------------------------------
//
// DIMACS-like: optional `c ...` comment lines, a header `p edge <n> <m>`,
// then m lines `e <u> <v>` with 1-based endpoints. Bare edge lists
// (`u v` per line, 1-based, n inferred from the largest id) also parse.

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace bandwidth
