#include "bandwidth/backtrack.hpp"

#include <algorithm>
#include <cassert>

namespace bandwidth {

namespace {

struct Enumerator {
    const Graph& g;
    const int n;
    const int k;
    std::vector<int> residual;
    const BucketWindows& windows;
    const std::function<bool(const std::vector<int>&)>& visit;
    SearchStats& stats;

    std::vector<int> bucket_of;
    std::vector<int> assigned_nbrs;
    int assigned = 0;
    bool stopped = false;

    Enumerator(const Graph& g, std::span<const int> res, const BucketWindows& windows,
               const std::function<bool(const std::vector<int>&)>& visit, SearchStats& stats)
        : g(g), n(g.n()), k(static_cast<int>(res.size())),
          residual(res.begin(), res.end()), windows(windows), visit(visit), stats(stats),
          bucket_of(n, -1), assigned_nbrs(n, 0)
    {
    }

    bool allowed(int v, int b) const
    {
        if (b < 0 || b >= k || residual[b] == 0)
            return false;
        return windows.empty() || (windows[v].first <= b && b <= windows[v].second);
    }

    void place(int v, int b)
    {
        ++stats.nodes_visited;
        bucket_of[v] = b;
        --residual[b];
        ++assigned;
        stats.max_depth = std::max(stats.max_depth, assigned);
        for (int w : g.neighbors(v))
            ++assigned_nbrs[w];
        extend();
        for (int w : g.neighbors(v))
            --assigned_nbrs[w];
        --assigned;
        ++residual[b];
        bucket_of[v] = -1;
    }

    void extend()
    {
        if (stopped)
            return;
        if (assigned == n) {
            if (!visit(bucket_of))
                stopped = true;
            return;
        }
        // most-constrained frontier vertex, ties by lowest id
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (bucket_of[v] == -1 && assigned_nbrs[v] > 0 &&
                (u == -1 || assigned_nbrs[v] > assigned_nbrs[u]))
                u = v;
        assert(u != -1 && "graph must be connected");
        int lo = 0, hi = k - 1;
        for (int w : g.neighbors(u))
            if (bucket_of[w] != -1) {
                lo = std::max(lo, bucket_of[w] - 1);
                hi = std::min(hi, bucket_of[w] + 1);
            }
        for (int b = lo; b <= hi && !stopped; ++b)
            if (allowed(u, b))
                place(u, b);
    }
};

}  // namespace

bool for_each_arrangement(const Graph& g, std::span<const int> residual, int root,
                          const BucketWindows& windows,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          SearchStats& stats)
{
    if (g.n() == 0) {
        std::vector<int> empty;
        return visit(empty);
    }
    assert(root >= 0 && root < g.n());
    assert(windows.empty() || static_cast<int>(windows.size()) == g.n());
    Enumerator e(g, residual, windows, visit, stats);
    for (int b = 0; b < e.k && !e.stopped; ++b)
        if (e.allowed(root, b))
            e.place(root, b);
    return !e.stopped;
}

DecideResult decide_backtrack(const Graph& g, const CapacityVector& c, const PinConstraint& pins)
{
    if (c.size() != g.n())
        throw std::invalid_argument("capacity vector size must equal the vertex count");
    if (!is_connected(g))
        throw std::invalid_argument("decide_backtrack needs a connected graph");
    const int k = c.length();
    std::vector<int> pin_count(k, 0);
    for (int v = 0; v < static_cast<int>(pins.pin_of.size()); ++v)
        if (pins.pin_of[v] >= 0) {
            if (v >= g.n() || pins.pin_of[v] >= k)
                throw std::invalid_argument("pin out of range");
            if (++pin_count[pins.pin_of[v]] > c[pins.pin_of[v]])
                throw std::invalid_argument("more vertices pinned to a bucket than its capacity");
        }

    DecideResult res;
    if (g.n() == 0) {
        res.arrangement = BucketArrangement{{}, c};
        return res;
    }
    BucketWindows windows;
    if (pins.any()) {
        windows.assign(g.n(), {0, k - 1});
        for (int v = 0; v < g.n(); ++v)
            if (pins.pinned(v))
                windows[v] = {pins.pin(v), pins.pin(v)};
    }
    int root = pins.any() ? pins.lowest_pinned() : 0;
    std::vector<int> residual(c.caps().begin(), c.caps().end());
    for_each_arrangement(
        g, residual, root, windows,
        [&](const std::vector<int>& bucket_of) {
            res.arrangement = BucketArrangement{bucket_of, c};
            return false;  // first witness wins
        },
        res.stats);
    return res;
}

ApproxResult approx2_backtrack(const Graph& g, SearchStats* stats)
{
    if (g.n() < 1)
        throw std::invalid_argument("approx2_backtrack needs n >= 1");
    if (!is_connected(g))
        throw std::invalid_argument("approx2_backtrack needs a connected graph");
    SearchStats total;
    for (int ell = 1; ell <= (g.n() + 1) / 2; ++ell) {
        auto c = make_capacity_vector(g.n(), ell, VectorStyle::balanced);
        auto dec = decide_backtrack(g, c);
        total.absorb(dec.stats);
        if (dec.arrangement) {
            if (stats)
                stats->absorb(total);
            ApproxResult out;
            out.ell_star = ell;
            out.lower = g.m() > 0 ? ell : 0;
            out.upper = 2 * ell - 1;
            out.witness = std::move(dec.arrangement);
            return out;
        }
    }
    // ell = ceil(n/2) gives at most two buckets and always succeeds
    throw std::logic_error("approximation loop failed to terminate");
}

}  // namespace bandwidth
