#include "bandwidth/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <sstream>

namespace bandwidth {

LinearArrangement LinearArrangement::identity(int n)
{
    LinearArrangement l;
    l.rank_of.resize(n);
    std::iota(l.rank_of.begin(), l.rank_of.end(), 1);
    return l;
}

std::vector<int> LinearArrangement::order() const
{
    std::vector<int> by_rank(n());
    for (int v = 0; v < n(); ++v) {
        int r = rank_of[v];
        if (r < 1 || r > n())
            throw std::invalid_argument("rank out of range");
        by_rank[r - 1] = v;
    }
    return by_rank;
}

bool LinearArrangement::is_valid() const
{
    std::vector<char> seen(n(), 0);
    for (int r : rank_of) {
        if (r < 1 || r > n() || seen[r - 1])
            return false;
        seen[r - 1] = 1;
    }
    return true;
}

CapacityVector::CapacityVector(std::vector<int> caps) : caps_(std::move(caps))
{
    for (int c : caps_)
        if (c < 1)
            throw std::invalid_argument("bucket capacities must be positive");
}

int CapacityVector::size() const
{
    return std::accumulate(caps_.begin(), caps_.end(), 0);
}

CapacityVector CapacityVector::slice(int lo, int hi) const
{
    if (lo < 0 || hi >= length() || lo > hi)
        throw std::invalid_argument("bad slice bounds");
    return CapacityVector(std::vector<int>(caps_.begin() + lo, caps_.begin() + hi + 1));
}

CapacityVector make_capacity_vector(int n, int ell, VectorStyle style)
{
    if (n < 1)
        throw std::invalid_argument("capacity vector needs n >= 1");
    if (ell < 1 || ell > (n + 1) / 2)
        throw std::invalid_argument("ell must be in [1, ceil(n/2)]");
    int k = (n + ell - 1) / ell;
    if (k == 1)
        return CapacityVector({n});
    // k = ceil(n/ell) forces a+b in [ell+1, 2*ell], so both ends stay >= 1
    int rem = n - (k - 2) * ell;
    int a, b;
    if (style == VectorStyle::left_packed) {
        a = ell;
        b = rem - ell;
    } else {
        a = (rem + 1) / 2;
        b = rem / 2;
    }
    assert(a >= 1 && b >= 1 && a <= ell && b <= ell);
    std::vector<int> caps(k, ell);
    caps.front() = a;
    caps.back() = b;
    return CapacityVector(std::move(caps));
}

int arrangement_bandwidth(const Graph& g, const LinearArrangement& l)
{
    if (l.n() != g.n() || !l.is_valid())
        throw std::invalid_argument("arrangement is not a bijection on the graph's vertices");
    int bw = 0;
    for (auto [u, v] : g.edges())
        bw = std::max(bw, std::abs(l.rank_of[u] - l.rank_of[v]));
    return bw;
}

LinearArrangement arrangement_from_buckets(const Graph& g, const BucketArrangement& b)
{
    if (auto bad = validate_bucket_arrangement(g, b))
        throw std::invalid_argument("invalid bucket arrangement: " + *bad);
    std::vector<int> verts(g.n());
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int x, int y) { return b.bucket_of[x] < b.bucket_of[y]; });
    LinearArrangement l;
    l.rank_of.resize(g.n());
    for (int r = 0; r < g.n(); ++r)
        l.rank_of[verts[r]] = r + 1;
    return l;
}

BucketingResult buckets_from_arrangement(const Graph& g, const LinearArrangement& l,
                                         const CapacityVector& c)
{
    if (c.size() != g.n())
        throw std::invalid_argument("capacity vector size must equal the vertex count");
    if (l.n() != g.n() || !l.is_valid())
        throw std::invalid_argument("arrangement is not a bijection on the graph's vertices");
    BucketingResult out;
    out.arrangement.capacity = c;
    out.arrangement.bucket_of.resize(g.n());
    auto by_rank = l.order();
    int at = 0;
    for (int i = 0; i < c.length(); ++i)
        for (int j = 0; j < c[i]; ++j)
            out.arrangement.bucket_of[by_rank[at++]] = i;
    for (auto [u, v] : g.edges()) {
        int d = std::abs(out.arrangement.bucket_of[u] - out.arrangement.bucket_of[v]);
        if (d > 1) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") spans buckets "
                << out.arrangement.bucket_of[u] << " and " << out.arrangement.bucket_of[v];
            out.violation = msg.str();
            break;
        }
    }
    return out;
}

std::optional<std::string> validate_bucket_arrangement(const Graph& g,
                                                       const BucketArrangement& b)
{
    const int k = b.capacity.length();
    if (static_cast<int>(b.bucket_of.size()) != g.n())
        return "assignment covers " + std::to_string(b.bucket_of.size()) + " vertices, graph has " +
               std::to_string(g.n());
    if (b.capacity.size() != g.n())
        return "capacity vector size " + std::to_string(b.capacity.size()) +
               " differs from vertex count " + std::to_string(g.n());
    std::vector<int> count(k, 0);
    for (int v = 0; v < g.n(); ++v) {
        int i = b.bucket_of[v];
        if (i < 0 || i >= k)
            return "vertex " + std::to_string(v) + " assigned to nonexistent bucket " +
                   std::to_string(i);
        ++count[i];
    }
    for (int i = 0; i < k; ++i)
        if (count[i] != b.capacity[i])
            return "bucket " + std::to_string(i) + " holds " + std::to_string(count[i]) +
                   " vertices, capacity is " + std::to_string(b.capacity[i]);
    for (auto [u, v] : g.edges())
        if (std::abs(b.bucket_of[u] - b.bucket_of[v]) > 1)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") spans buckets " +
                   std::to_string(b.bucket_of[u]) + " and " + std::to_string(b.bucket_of[v]);
    return std::nullopt;
}

namespace {

// Branch and bound: fill positions left to right, only allowing stretches
// strictly below the incumbent, and force a placement when a placed vertex
// is about to run out of room for its last unplaced neighbor.
struct ExactSolver {
    const Graph& g;
    int n;
    int best;
    int lower;
    std::vector<int> pos;
    std::vector<int> order;
    std::vector<int> unplaced_deg;
    std::vector<int> best_order;
    long long nodes = 0;

    ExactSolver(const Graph& g, int seed_bw, std::vector<int> seed_order, int lower)
        : g(g), n(g.n()), best(seed_bw), lower(lower), pos(n, -1),
          unplaced_deg(n), best_order(std::move(seed_order))
    {
        for (int v = 0; v < n; ++v)
            unplaced_deg[v] = g.degree(v);
        order.reserve(n);
    }

    void run()
    {
        if (best > lower)
            dfs(0, 0);
    }

    void dfs(int p, int cur)
    {
        if (best == lower)
            return;
        if (p == n) {
            best = cur;
            best_order = order;
            return;
        }
        int forced = -1;
        for (int q = 0; q < p; ++q) {
            int u = order[q];
            if (unplaced_deg[u] == 0)
                continue;
            int slack = best - 1 - (p - q);
            if (slack < 0)
                return;
            if (slack == 0) {
                if (unplaced_deg[u] > 1)
                    return;  // two neighbors compete for one slot
                int w = -1;
                for (int x : g.neighbors(u))
                    if (pos[x] == -1) {
                        w = x;
                        break;
                    }
                if (forced != -1 && forced != w)
                    return;
                forced = w;
            }
        }
        for (int v = forced != -1 ? forced : 0; v < n; ++v) {
            if (pos[v] != -1)
                continue;
            int mx = cur;
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (pos[u] == -1)
                    continue;
                int s = p - pos[u];
                if (s >= best) {
                    ok = false;
                    break;
                }
                mx = std::max(mx, s);
            }
            if (ok) {
                ++nodes;
                pos[v] = p;
                order.push_back(v);
                for (int u : g.neighbors(v))
                    --unplaced_deg[u];
                dfs(p + 1, mx);
                for (int u : g.neighbors(v))
                    ++unplaced_deg[u];
                order.pop_back();
                pos[v] = -1;
                if (best == lower)
                    return;
            }
            if (forced != -1)
                break;
        }
    }
};

std::vector<int> bfs_order(const Graph& g, int start)
{
    std::vector<int> order;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    auto push = [&](int v) {
        seen[v] = 1;
        q.push(v);
    };
    push(start);
    int next_start = 0;
    while (static_cast<int>(order.size()) < g.n()) {
        if (q.empty()) {
            while (seen[next_start])
                ++next_start;
            push(next_start);
        }
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w])
                push(w);
    }
    return order;
}

int order_bandwidth(const Graph& g, const std::vector<int>& order)
{
    std::vector<int> pos(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        pos[order[i]] = i;
    int bw = 0;
    for (auto [u, v] : g.edges())
        bw = std::max(bw, std::abs(pos[u] - pos[v]));
    return bw;
}

}  // namespace

ExactResult exact_bandwidth(const Graph& g, int cap)
{
    if (g.n() > cap)
        throw CapExceededError("exact oracle refuses n=" + std::to_string(g.n()) + " > cap=" +
                               std::to_string(cap));
    ExactResult res;
    const int n = g.n();
    if (n == 0)
        return res;

    int lower = 0;
    for (int v = 0; v < n; ++v)
        lower = std::max(lower, (g.degree(v) + 1) / 2);
    // per-component (size-1)/diameter bound
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        auto sub = induced_subgraph(g, comp);
        int diam = 0;
        for (int s = 0; s < sub.graph.n(); ++s) {
            std::vector<int> dist(sub.graph.n(), -1);
            std::queue<int> q;
            dist[s] = 0;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                diam = std::max(diam, dist[v]);
                for (int w : sub.graph.neighbors(v))
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        q.push(w);
                    }
            }
        }
        int sz = static_cast<int>(comp.size());
        lower = std::max(lower, (sz - 1 + diam - 1) / diam);
    }

    std::vector<int> seed(n);
    std::iota(seed.begin(), seed.end(), 0);
    int seed_bw = order_bandwidth(g, seed);
    for (int s = 0; s < n; ++s) {
        auto ord = bfs_order(g, s);
        int bw = order_bandwidth(g, ord);
        if (bw < seed_bw) {
            seed_bw = bw;
            seed = std::move(ord);
        }
    }

    ExactSolver solver(g, seed_bw, std::move(seed), lower);
    solver.run();
    res.bandwidth = solver.best;
    res.nodes = solver.nodes;
    res.arrangement.rank_of.resize(n);
    for (int p = 0; p < n; ++p)
        res.arrangement.rank_of[solver.best_order[p]] = p + 1;
    return res;
}

}  // namespace bandwidth
