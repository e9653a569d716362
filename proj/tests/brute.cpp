#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace brute {

using bandwidth::BucketWindows;
using bandwidth::Graph;
using bandwidth::VertexSet;

int min_bandwidth(const Graph& g)
{
    const int n = g.n();
    if (n == 0)
        return 0;
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    int best = n;
    do {
        int bw = 0;
        for (auto [u, v] : g.edges())
            bw = std::max(bw, std::abs(pos[u] - pos[v]));
        best = std::min(best, bw);
    } while (std::next_permutation(pos.begin(), pos.end()));
    return best;
}

namespace {

bool dfs_assign(const Graph& g, const std::vector<int>& caps, const BucketWindows& windows,
                std::vector<int>& bucket_of, std::vector<int>& used, int v)
{
    const int n = g.n();
    while (v < n && bucket_of[v] != -1)
        ++v;
    if (v == n)
        return true;
    for (int b = 0; b < static_cast<int>(caps.size()); ++b) {
        if (used[b] == caps[b])
            continue;
        if (!windows.empty() && (b < windows[v].first || b > windows[v].second))
            continue;
        bool ok = true;
        for (int w : g.neighbors(v))
            if (bucket_of[w] != -1 && std::abs(bucket_of[w] - b) > 1) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        bucket_of[v] = b;
        ++used[b];
        if (dfs_assign(g, caps, windows, bucket_of, used, v + 1))
            return true;
        --used[b];
        bucket_of[v] = -1;
    }
    return false;
}

}  // namespace

bool exists_assignment(const Graph& g, const std::vector<int>& caps, const BucketWindows& windows)
{
    std::vector<int> bucket_of(g.n(), -1), used(caps.size(), 0);
    return dfs_assign(g, caps, windows, bucket_of, used, 0);
}

bool completable(const Graph& g, const std::vector<int>& caps, std::vector<int> fixed,
                 const std::vector<std::pair<int, VertexSet>>& pairs,
                 const BucketWindows& windows)
{
    // branch over every split of every jointly full pair, then complete
    std::function<bool(size_t)> split = [&](size_t pi) {
        if (pi == pairs.size()) {
            std::vector<int> used(caps.size(), 0);
            for (int b : fixed)
                if (b != -1)
                    ++used[b];
            for (size_t i = 0; i < used.size(); ++i)
                if (used[i] > caps[i])
                    return false;
            for (auto [u, v] : g.edges())
                if (fixed[u] != -1 && fixed[v] != -1 && std::abs(fixed[u] - fixed[v]) > 1)
                    return false;
            if (!windows.empty())
                for (int v = 0; v < g.n(); ++v)
                    if (fixed[v] != -1 &&
                        (fixed[v] < windows[v].first || fixed[v] > windows[v].second))
                        return false;
            std::vector<int> bucket_of = fixed;
            return dfs_assign(g, caps, windows, bucket_of, used, 0);
        }
        const int lo = pairs[pi].first;
        const VertexSet& verts = pairs[pi].second;
        const int m = static_cast<int>(verts.size());
        const int want = caps[lo];
        bool found = false;
        std::vector<char> to_lo(m, 0);
        std::function<void(int, int)> choose = [&](int idx, int taken) {
            if (found)
                return;
            if (taken == want) {
                for (int t = 0; t < m; ++t)
                    fixed[verts[t]] = (t < idx && to_lo[t]) ? lo : lo + 1;
                found = split(pi + 1);
                if (!found)
                    for (int v : verts)
                        fixed[v] = -1;
                return;
            }
            if (idx == m || taken + m - idx < want)
                return;
            to_lo[idx] = 1;
            choose(idx + 1, taken + 1);
            to_lo[idx] = 0;
            choose(idx + 1, taken);
        };
        choose(0, 0);
        return found;
    };
    return split(0);
}

std::set<std::vector<int>> residual_set(const Graph& g, const std::vector<int>& caps, int j,
                                        const VertexSet& x)
{
    const int n = g.n();
    int threshold = 0;
    while ((threshold + 1) * (threshold + 1) <= n)
        ++threshold;

    std::vector<char> in_x(n, 0);
    for (int v : x)
        in_x[v] = 1;
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_x[v])
            rest.push_back(v);
    auto sub = bandwidth::induced_subgraph(g, rest);

    VertexSet small_verts;
    for (const auto& comp : bandwidth::connected_components(sub.graph))
        if (static_cast<int>(comp.size()) <= threshold)
            for (int v : comp)
                small_verts.push_back(sub.orig_of[v]);
    std::sort(small_verts.begin(), small_verts.end());

    std::vector<int> used(caps.size(), 0);
    std::vector<int> bucket_of(n, -1);
    for (int v : x)
        bucket_of[v] = j;
    used[j] = static_cast<int>(x.size());

    std::set<std::vector<int>> out;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == small_verts.size()) {
            std::vector<int> residual(caps.size());
            for (size_t b = 0; b < caps.size(); ++b)
                residual[b] = caps[b] - used[b];
            out.insert(std::move(residual));
            return;
        }
        int v = small_verts[idx];
        for (int b = 0; b < static_cast<int>(caps.size()); ++b) {
            if (used[b] == caps[b])
                continue;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (bucket_of[w] != -1 && std::abs(bucket_of[w] - b) > 1) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            bucket_of[v] = b;
            ++used[b];
            rec(idx + 1);
            --used[b];
            bucket_of[v] = -1;
        }
    };
    rec(0);
    return out;
}

}  // namespace brute
