#include "bandwidth/constant_k.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "bandwidth/divide_conquer.hpp"
#include "enumeration.hpp"

namespace bandwidth {

using detail::floor_sqrt;
using detail::for_each_superset;
using detail::windows_from_pins;

// --- PartialBucketArrangement ----------------------------------------------

PartialBucketArrangement PartialBucketArrangement::single_full(const CapacityVector& c,
                                                               int bucket, VertexSet x)
{
    std::sort(x.begin(), x.end());
    PartialBucketArrangement p;
    p.capacity = c;
    p.regions.push_back({bucket, bucket, std::move(x)});
    return p;
}

PartialBucketArrangement PartialBucketArrangement::jointly_full(const CapacityVector& c, int lo,
                                                                VertexSet x)
{
    std::sort(x.begin(), x.end());
    PartialBucketArrangement p;
    p.capacity = c;
    p.regions.push_back({lo, lo + 1, std::move(x)});
    return p;
}

VertexSet PartialBucketArrangement::assigned() const
{
    VertexSet all;
    for (const auto& r : regions)
        all.insert(all.end(), r.vertices.begin(), r.vertices.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool PartialBucketArrangement::bucket_filled(int i) const
{
    for (const auto& r : regions)
        if (r.lo <= i && i <= r.hi)
            return true;
    return false;
}

int PartialBucketArrangement::max_empty_run() const
{
    int longest = 0, run = 0;
    for (int b = 0; b < capacity.length(); ++b) {
        run = bucket_filled(b) ? 0 : run + 1;
        longest = std::max(longest, run);
    }
    return longest;
}

std::optional<std::string> PartialBucketArrangement::validate(const Graph& g) const
{
    if (capacity.size() != g.n())
        return "capacity vector size differs from vertex count";
    int prev_hi = -1;
    std::vector<int> region_of(g.n(), -1);
    for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri) {
        const auto& r = regions[ri];
        if (r.lo < 0 || r.hi >= capacity.length() || r.hi - r.lo < 0 || r.hi - r.lo > 1)
            return "malformed region at bucket " + std::to_string(r.lo);
        if (r.lo <= prev_hi)
            return "regions overlap or are unsorted";
        prev_hi = r.hi;
        int want = capacity[r.lo] + (r.hi > r.lo ? capacity[r.hi] : 0);
        if (static_cast<int>(r.vertices.size()) != want)
            return "region at bucket " + std::to_string(r.lo) + " holds " +
                   std::to_string(r.vertices.size()) + " vertices, needs " + std::to_string(want);
        for (int v : r.vertices) {
            if (v < 0 || v >= g.n())
                return "region vertex out of range";
            if (region_of[v] != -1)
                return "vertex " + std::to_string(v) + " assigned twice";
            region_of[v] = ri;
        }
    }
    // assigned-assigned edges: interval distance at most 1
    for (auto [u, v] : g.edges()) {
        if (region_of[u] == -1 || region_of[v] == -1)
            continue;
        const auto& a = regions[region_of[u]];
        const auto& b = regions[region_of[v]];
        int gap = std::max({a.lo - b.hi, b.lo - a.hi, 0});
        if (gap > 1)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") spans non-adjacent filled regions";
    }
    return std::nullopt;
}

namespace {

struct CkContext {
    SearchStats search;
    DpStats dp;
};

struct Run {
    int lo, hi;  // hi - lo in {0, 1}
};

// Completion DP once every filled bucket is exactly full: classify each
// unassigned component by its admissible empty runs, then fill registers
// (s for single-bucket runs; t, x_lo, x_hi for two-bucket runs) component
// by component, memoizing failed states. Returns the completed bucket_of.
std::optional<std::vector<int>> complete_by_dp(const Graph& g, const std::vector<int>& caps,
                                               std::vector<int> fixed,
                                               const BucketWindows& windows, CkContext& ctx)
{
    const int n = g.n();
    const int k = static_cast<int>(caps.size());

    std::vector<int> filled_count(k, 0);
    for (int v = 0; v < n; ++v)
        if (fixed[v] >= 0)
            ++filled_count[fixed[v]];
    std::vector<char> open(k, 0);
    for (int b = 0; b < k; ++b) {
        assert(filled_count[b] == 0 || filled_count[b] == caps[b]);
        open[b] = filled_count[b] == 0 && caps[b] > 0;
    }
    std::vector<Run> runs;
    for (int b = 0; b < k; ++b) {
        if (!open[b])
            continue;
        if (!runs.empty() && runs.back().hi == b - 1)
            runs.back().hi = b;
        else
            runs.push_back({b, b});
        if (runs.back().hi - runs.back().lo > 1)
            throw std::logic_error("completion DP needs empty runs of length at most 2");
    }
    const int nruns = static_cast<int>(runs.size());

    VertexSet unassigned;
    for (int v = 0; v < n; ++v)
        if (fixed[v] == -1)
            unassigned.push_back(v);
    if (unassigned.empty()) {
        for (int ri = 0; ri < nruns; ++ri)
            for (int b = runs[ri].lo; b <= runs[ri].hi; ++b)
                if (caps[b] > 0)
                    return std::nullopt;  // empty bucket can never fill up
        return fixed;
    }

    // per-vertex feasible bucket interval from fixed neighbors and windows
    std::vector<std::pair<int, int>> feas(n, {0, k - 1});
    for (int v : unassigned) {
        if (!windows.empty())
            feas[v] = windows[v];
        for (int w : g.neighbors(v))
            if (fixed[w] >= 0) {
                feas[v].first = std::max(feas[v].first, fixed[w] - 1);
                feas[v].second = std::min(feas[v].second, fixed[w] + 1);
            }
        if (feas[v].first > feas[v].second)
            return std::nullopt;
        bool touches_open = false;
        for (int b = feas[v].first; b <= feas[v].second && !touches_open; ++b)
            touches_open = open[b];
        if (!touches_open)
            return std::nullopt;
    }

    auto sub = induced_subgraph(g, unassigned);
    auto comps = connected_components(sub.graph);
    const int ncomps = static_cast<int>(comps.size());
    for (auto& comp : comps)
        for (int& v : comp)
            v = sub.orig_of[v];

    // admissibility and forced counts per component and run
    std::vector<std::vector<char>> adm(ncomps, std::vector<char>(nruns, 1));
    std::vector<std::vector<int>> force_lo(ncomps, std::vector<int>(nruns, 0));
    std::vector<std::vector<int>> force_hi(ncomps, std::vector<int>(nruns, 0));
    for (int ci = 0; ci < ncomps; ++ci)
        for (int ri = 0; ri < nruns; ++ri) {
            const Run r = runs[ri];
            for (int v : comps[ci]) {
                int lo = std::max(feas[v].first, r.lo);
                int hi = std::min(feas[v].second, r.hi);
                if (lo > hi) {
                    adm[ci][ri] = 0;
                    break;
                }
                if (r.hi > r.lo) {
                    if (lo == hi && lo == r.lo)
                        ++force_lo[ci][ri];
                    if (lo == hi && lo == r.hi)
                        ++force_hi[ci][ri];
                }
            }
        }

    // registers: single run -> s; pair run -> t, x_lo, x_hi
    std::vector<int> reg_base(nruns);
    int nregs = 0;
    for (int ri = 0; ri < nruns; ++ri) {
        reg_base[ri] = nregs;
        nregs += runs[ri].hi > runs[ri].lo ? 3 : 1;
    }

    const double memo_bound = std::pow(std::max(n, 1), 2.0 * k);
    std::set<DpState> failed;
    std::vector<int> choice(ncomps, -1);

    auto final_ok = [&](const std::vector<int>& regs) {
        for (int ri = 0; ri < nruns; ++ri) {
            const Run r = runs[ri];
            int want = caps[r.lo] + (r.hi > r.lo ? caps[r.hi] : 0);
            if (regs[reg_base[ri]] != want)
                return false;
        }
        return true;
    };

    std::function<bool(int, const std::vector<int>&)> rec = [&](int p,
                                                                const std::vector<int>& regs) {
        if (p == ncomps)
            return final_ok(regs);
        DpState st{p, regs};
        if (failed.count(st))
            return false;
        const int sz = static_cast<int>(comps[p].size());
        for (int ri = 0; ri < nruns; ++ri) {
            if (!adm[p][ri])
                continue;
            ++ctx.dp.transitions;
            ++ctx.search.nodes_visited;
            const Run r = runs[ri];
            std::vector<int> next = regs;
            int base = reg_base[ri];
            if (r.hi == r.lo) {
                next[base] += sz;
                if (next[base] > caps[r.lo])
                    continue;
            } else {
                next[base] += sz;
                next[base + 1] += force_lo[p][ri];
                next[base + 2] += force_hi[p][ri];
                if (next[base] > caps[r.lo] + caps[r.hi] || next[base + 1] > caps[r.lo] ||
                    next[base + 2] > caps[r.hi])
                    continue;
            }
            if (rec(p + 1, next)) {
                choice[p] = ri;
                return true;
            }
        }
        failed.insert(std::move(st));
        if (static_cast<double>(failed.size()) > memo_bound)
            throw std::logic_error("completion DP exceeded its n^(2k) state bound");
        ctx.dp.max_memo_states =
            std::max(ctx.dp.max_memo_states, static_cast<long long>(failed.size()));
        return false;
    };

    if (!rec(0, std::vector<int>(nregs, 0)))
        return std::nullopt;

    // materialize: forced vertices first, free ones fill the left bucket of
    // a pair run in ascending id order until it reaches capacity
    for (int ri = 0; ri < nruns; ++ri) {
        const Run r = runs[ri];
        if (r.hi == r.lo) {
            for (int ci = 0; ci < ncomps; ++ci)
                if (choice[ci] == ri)
                    for (int v : comps[ci])
                        fixed[v] = r.lo;
            continue;
        }
        VertexSet free_verts;
        int lo_used = 0;
        for (int ci = 0; ci < ncomps; ++ci) {
            if (choice[ci] != ri)
                continue;
            for (int v : comps[ci]) {
                int lo = std::max(feas[v].first, r.lo);
                int hi = std::min(feas[v].second, r.hi);
                if (lo == hi) {
                    fixed[v] = lo;
                    if (lo == r.lo)
                        ++lo_used;
                } else {
                    free_verts.push_back(v);
                }
            }
        }
        std::sort(free_verts.begin(), free_verts.end());
        for (int v : free_verts) {
            if (lo_used < caps[r.lo]) {
                fixed[v] = r.lo;
                ++lo_used;
            } else {
                fixed[v] = r.hi;
            }
        }
    }
    return fixed;
}

// Enumerate the explicit splits of every jointly full pair (respecting the
// static forcing from edges into other filled regions), then run the DP.
std::optional<std::vector<int>> complete_with_pairs(
    const Graph& g, const std::vector<int>& caps, std::vector<int>& fixed,
    const std::vector<std::pair<int, VertexSet>>& pairs, const BucketWindows& windows,
    CkContext& ctx)
{
    if (pairs.empty())
        return complete_by_dp(g, caps, fixed, windows, ctx);

    const int n = g.n();
    std::vector<int> pair_idx(n, -1);
    for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi)
        for (int v : pairs[pi].second)
            pair_idx[v] = pi;

    // static side restrictions per pair vertex
    std::vector<VertexSet> req_lo(pairs.size()), req_hi(pairs.size()), free_verts(pairs.size());
    for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi) {
        const int lo = pairs[pi].first, hi = lo + 1;
        for (int w : pairs[pi].second) {
            bool can_lo = true, can_hi = true;
            if (!windows.empty()) {
                can_lo = windows[w].first <= lo && lo <= windows[w].second;
                can_hi = windows[w].first <= hi && hi <= windows[w].second;
            }
            for (int z : g.neighbors(w)) {
                if (fixed[z] >= 0) {
                    can_lo &= std::abs(lo - fixed[z]) <= 1;
                    can_hi &= std::abs(hi - fixed[z]) <= 1;
                } else if (pair_idx[z] >= 0 && pair_idx[z] != pi) {
                    int zlo = pairs[pair_idx[z]].first;
                    if (zlo > lo) {  // other pair is to the right
                        if (zlo - hi >= 2)
                            return std::nullopt;
                        can_lo = false;  // w must sit at hi, z at zlo
                    } else {
                        if (lo - (zlo + 1) >= 2)
                            return std::nullopt;
                        can_hi = false;
                    }
                }
            }
            if (!can_lo && !can_hi)
                return std::nullopt;
            if (!can_lo)
                req_hi[pi].push_back(w);
            else if (!can_hi)
                req_lo[pi].push_back(w);
            else
                free_verts[pi].push_back(w);
        }
        if (static_cast<int>(req_lo[pi].size()) > caps[lo] ||
            static_cast<int>(req_hi[pi].size()) > caps[hi])
            return std::nullopt;
    }

    std::optional<std::vector<int>> result;
    std::function<bool(int)> split = [&](int pi) {
        if (pi == static_cast<int>(pairs.size())) {
            result = complete_by_dp(g, caps, fixed, windows, ctx);
            return !result.has_value();
        }
        const int lo = pairs[pi].first, hi = lo + 1;
        return for_each_superset(
            req_lo[pi], free_verts[pi], caps[lo] - static_cast<int>(req_lo[pi].size()),
            [&](const VertexSet& s) {
                for (int v : pairs[pi].second)
                    fixed[v] = hi;
                for (int v : s)
                    fixed[v] = lo;
                bool keep_going = split(pi + 1);
                for (int v : pairs[pi].second)
                    fixed[v] = -1;
                return keep_going;
            });
    };
    split(0);
    return result;
}

// Residual vectors over all placements of the small components, with one
// representative placement (original vertex, bucket) per residual.
using Placement = std::vector<std::pair<int, int>>;

std::map<ResidualVector, Placement> produced_vectors_rep(const Graph& g,
                                                         const std::vector<int>& caps, int j,
                                                         const VertexSet& x,
                                                         const PinConstraint& pins, CkContext& ctx)
{
    const int n = g.n();
    const int k = static_cast<int>(caps.size());
    assert(static_cast<int>(x.size()) == caps[j]);
    const int threshold = floor_sqrt(n);

    std::vector<char> in_x(n, 0), nx(n, 0);
    for (int v : x)
        in_x[v] = 1;
    for (int v : open_neighborhood(g, x))
        nx[v] = 1;

    ResidualVector base = caps;
    base[j] = 0;
    std::map<ResidualVector, Placement> result;
    result.emplace(std::move(base), Placement{});

    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_x[v])
            rest.push_back(v);
    auto rest_sub = induced_subgraph(g, rest);
    for (const auto& comp_local : connected_components(rest_sub.graph)) {
        if (static_cast<int>(comp_local.size()) > threshold)
            continue;
        VertexSet comp;
        for (int v : comp_local)
            comp.push_back(rest_sub.orig_of[v]);
        auto sub = induced_subgraph(g, comp);
        BucketWindows windows(sub.graph.n(), {0, k - 1});
        int root = 0;
        bool any_pin = false;
        for (int local = 0; local < sub.graph.n(); ++local) {
            int v = sub.orig_of[local];
            if (pins.pinned(v)) {
                windows[local] = {pins.pin(v), pins.pin(v)};
                if (!any_pin) {
                    any_pin = true;
                    root = local;
                }
            }
            if (nx[v]) {
                windows[local].first = std::max(windows[local].first, j - 1);
                windows[local].second = std::min(windows[local].second, j + 1);
            }
            if (windows[local].first > windows[local].second)
                return {};  // this component can never be placed
        }
        std::map<ResidualVector, Placement> next;
        for (const auto& entry : result) {
            const ResidualVector& residual = entry.first;
            const Placement& rep = entry.second;
            for_each_arrangement(
                sub.graph, residual, root, windows,
                [&](const std::vector<int>& bucket_of) {
                    ResidualVector r2 = residual;
                    for (int b : bucket_of)
                        --r2[b];
                    if (!next.count(r2)) {
                        Placement rep2 = rep;
                        for (int local = 0; local < sub.graph.n(); ++local)
                            rep2.emplace_back(sub.orig_of[local], bucket_of[local]);
                        next.emplace(std::move(r2), std::move(rep2));
                    }
                    return true;
                },
                ctx.search);
        }
        result = std::move(next);
        if (result.empty())
            break;
    }
    return result;
}

std::optional<std::vector<int>> solve_ck(CkContext& ctx, const Graph& g,
                                         const std::vector<int>& caps, const PinConstraint& pins);

// Three buckets: X fills bucket 2, its neighborhood goes to bucket 1, the
// rest splits freely. Pins toward bucket 2 flip the enumeration end by
// mirroring the instance.
std::optional<std::vector<int>> k3_forward(CkContext& ctx, const Graph& g,
                                           const std::vector<int>& caps, const PinConstraint& pins)
{
    const int n = g.n();
    VertexSet required, pool, pinned0, pinned1;
    for (int v = 0; v < n; ++v) {
        if (pins.pinned(v)) {
            switch (pins.pin(v)) {
            case 0: pinned0.push_back(v); break;
            case 1: pinned1.push_back(v); break;
            default: required.push_back(v); break;
            }
        } else {
            pool.push_back(v);
        }
    }
    if (static_cast<int>(required.size()) > caps[2])
        return std::nullopt;

    std::vector<char> is_pinned0(n, 0), is_pinned1(n, 0);
    for (int v : pinned0)
        is_pinned0[v] = 1;
    for (int v : pinned1)
        is_pinned1[v] = 1;

    std::optional<std::vector<int>> result;
    for_each_superset(required, pool, caps[2] - static_cast<int>(required.size()),
                      [&](const VertexSet& x) {
                          ++ctx.search.nodes_visited;
                          auto m = open_neighborhood(g, x);
                          std::vector<char> in_b1(n, 0);
                          int b1_count = 0;
                          for (int v : m) {
                              if (is_pinned0[v])
                                  return true;  // neighbor of X cannot sit in bucket 0
                              in_b1[v] = 1;
                              ++b1_count;
                          }
                          for (int v : pinned1)
                              if (!in_b1[v]) {
                                  in_b1[v] = 1;
                                  ++b1_count;
                              }
                          if (b1_count > caps[1])
                              return true;
                          std::vector<int> bucket_of(n, 0);
                          for (int v : x)
                              bucket_of[v] = 2;
                          std::vector<char> in_x(n, 0);
                          for (int v : x)
                              in_x[v] = 1;
                          int b1_left = caps[1] - b1_count;
                          for (int v = 0; v < n; ++v) {
                              if (in_x[v])
                                  continue;
                              if (in_b1[v])
                                  bucket_of[v] = 1;
                              else if (!is_pinned0[v] && b1_left > 0) {
                                  bucket_of[v] = 1;
                                  --b1_left;
                              }
                          }
                          result = std::move(bucket_of);
                          return false;
                      });
    return result;
}

std::optional<std::vector<int>> k3_decide(CkContext& ctx, const Graph& g,
                                          const std::vector<int>& caps, const PinConstraint& pins)
{
    bool pin_at_2 = false, pin_at_0 = false;
    for (int v = 0; v < g.n(); ++v)
        if (pins.pinned(v)) {
            pin_at_2 |= pins.pin(v) == 2;
            pin_at_0 |= pins.pin(v) == 0;
        }
    if (pin_at_2 && !pin_at_0) {
        std::vector<int> rcaps{caps[2], caps[1], caps[0]};
        PinConstraint rpins;
        for (int v = 0; v < g.n(); ++v)
            if (pins.pinned(v))
                rpins.set(v, 2 - pins.pin(v));
        auto sol = k3_forward(ctx, g, rcaps, rpins);
        if (sol)
            for (int& b : *sol)
                b = 2 - b;
        return sol;
    }
    return k3_forward(ctx, g, caps, pins);
}

// Middle-bucket strategy for k >= 7: enumerate X for the middle bucket,
// fold the small components into produced capacity vectors, branch large
// components to the two sides, and solve each side recursively.
std::optional<std::vector<int>> solve_middle_split(CkContext& ctx, const Graph& g,
                                                   const std::vector<int>& caps,
                                                   const PinConstraint& pins)
{
    const int n = g.n();
    const int k = static_cast<int>(caps.size());
    const int m0 = (k - 1) / 2;
    const int threshold = floor_sqrt(n);

    VertexSet required, pool;
    for (int v = 0; v < n; ++v) {
        if (pins.pinned(v)) {
            if (pins.pin(v) == m0)
                required.push_back(v);
        } else {
            pool.push_back(v);
        }
    }
    if (static_cast<int>(required.size()) > caps[m0])
        return std::nullopt;

    std::optional<std::vector<int>> result;
    for_each_superset(required, pool, caps[m0] - static_cast<int>(required.size()), [&](const VertexSet& x) {
        ++ctx.search.nodes_visited;
        std::vector<char> in_x(n, 0), nx(n, 0);
        for (int v : x)
            in_x[v] = 1;
        for (int v : open_neighborhood(g, x))
            nx[v] = 1;

        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!in_x[v])
                rest.push_back(v);
        auto rest_sub = induced_subgraph(g, rest);
        std::vector<VertexSet> comps;
        for (const auto& local : connected_components(rest_sub.graph)) {
            VertexSet comp;
            for (int v : local)
                comp.push_back(rest_sub.orig_of[v]);
            comps.push_back(std::move(comp));
        }

        // each component adjacent to X needs a vertex next to the middle bucket
        int adjacent = 0;
        for (const auto& comp : comps)
            adjacent += std::any_of(comp.begin(), comp.end(), [&](int v) { return nx[v] != 0; });
        int slot_bound = (m0 > 0 ? caps[m0 - 1] : 0) + (m0 < k - 1 ? caps[m0 + 1] : 0);
        if (adjacent > slot_bound)
            return true;

        auto produced = produced_vectors_rep(g, caps, m0, x, pins, ctx);
        if (produced.empty())
            return true;

        struct LargeComp {
            const VertexSet* verts;
            int size;
            bool can_left, can_right;
        };
        std::vector<LargeComp> larges;
        for (const auto& comp : comps) {
            if (static_cast<int>(comp.size()) <= threshold)
                continue;
            LargeComp lc{&comp, static_cast<int>(comp.size()), m0 > 0, m0 < k - 1};
            for (int v : comp)
                if (pins.pinned(v)) {
                    int p = pins.pin(v);
                    lc.can_left &= p < m0 && (!nx[v] || p == m0 - 1);
                    lc.can_right &= p > m0 && (!nx[v] || p == m0 + 1);
                }
            larges.push_back(lc);
        }
        std::stable_sort(larges.begin(), larges.end(),
                         [](const LargeComp& a, const LargeComp& b) { return a.size > b.size; });

        for (const auto& entry : produced) {
            const ResidualVector& residual = entry.first;
            const Placement& rep = entry.second;
            assert(residual[m0] == 0);
            const int left_target = std::accumulate(residual.begin(), residual.begin() + m0, 0);
            const int right_target =
                std::accumulate(residual.begin() + m0 + 1, residual.end(), 0);

            std::vector<char> to_left(larges.size(), 0);
            std::function<bool(int, int, int)> assign = [&](int idx, int left_rem, int right_rem) {
                if (idx == static_cast<int>(larges.size())) {
                    if (left_rem != 0 || right_rem != 0)
                        return true;
                    VertexSet left_v, right_v;
                    for (size_t t = 0; t < larges.size(); ++t) {
                        auto& dst = to_left[t] ? left_v : right_v;
                        dst.insert(dst.end(), larges[t].verts->begin(), larges[t].verts->end());
                    }
                    std::sort(left_v.begin(), left_v.end());
                    std::sort(right_v.begin(), right_v.end());

                    auto solve_one_side = [&](const VertexSet& verts, int bucket_lo, int bucket_hi,
                                              int nx_bucket) -> std::optional<std::vector<int>> {
                        auto side = induced_subgraph(g, verts);
                        PinConstraint side_pins;
                        for (int v : verts) {
                            int local = side.to_sub[v];
                            if (pins.pinned(v))
                                side_pins.set(local, pins.pin(v) - bucket_lo);
                            if (nx[v])
                                side_pins.set(local, nx_bucket - bucket_lo);
                        }
                        std::vector<int> side_caps(residual.begin() + bucket_lo,
                                                   residual.begin() + bucket_hi + 1);
                        auto sol = solve_ck(ctx, side.graph, side_caps, side_pins);
                        if (!sol)
                            return std::nullopt;
                        std::vector<int> mapped(verts.size());
                        for (int local = 0; local < side.graph.n(); ++local)
                            mapped[local] = (*sol)[local] + bucket_lo;
                        return mapped;
                    };

                    auto left_sol = solve_one_side(left_v, 0, m0 - 1, m0 - 1);
                    if (!left_sol)
                        return true;
                    auto right_sol = solve_one_side(right_v, m0 + 1, k - 1, m0 + 1);
                    if (!right_sol)
                        return true;

                    std::vector<int> bucket_of(n, -1);
                    for (int v : x)
                        bucket_of[v] = m0;
                    for (auto [v, b] : rep)
                        bucket_of[v] = b;
                    auto left_sub = induced_subgraph(g, left_v);
                    for (int local = 0; local < static_cast<int>(left_v.size()); ++local)
                        bucket_of[left_sub.orig_of[local]] = (*left_sol)[local];
                    auto right_sub = induced_subgraph(g, right_v);
                    for (int local = 0; local < static_cast<int>(right_v.size()); ++local)
                        bucket_of[right_sub.orig_of[local]] = (*right_sol)[local];
                    result = std::move(bucket_of);
                    return false;
                }
                const auto& lc = larges[idx];
                if (lc.can_left && lc.size <= left_rem) {
                    to_left[idx] = 1;
                    if (!assign(idx + 1, left_rem - lc.size, right_rem))
                        return false;
                }
                if (lc.can_right && lc.size <= right_rem) {
                    to_left[idx] = 0;
                    if (!assign(idx + 1, left_rem, right_rem - lc.size))
                        return false;
                }
                return true;
            };
            if (!assign(0, left_target, right_target))
                return false;
        }
        return true;
    });
    return result;
}

std::optional<std::vector<int>> solve_ck(CkContext& ctx, const Graph& g,
                                         const std::vector<int>& caps, const PinConstraint& pins)
{
    const int n = g.n();
    const int k = static_cast<int>(caps.size());
    assert(std::accumulate(caps.begin(), caps.end(), 0) == n);

    std::vector<int> pin_count(k, 0);
    for (int v = 0; v < n; ++v)
        if (pins.pinned(v)) {
            assert(pins.pin(v) >= 0 && pins.pin(v) < k);
            if (++pin_count[pins.pin(v)] > caps[pins.pin(v)])
                return std::nullopt;
        }

    if (k <= 2) {
        // any capacity-respecting placement works with at most two buckets
        std::vector<int> bucket_of(n, -1);
        std::vector<int> room = caps;
        for (int v = 0; v < n; ++v)
            if (pins.pinned(v)) {
                bucket_of[v] = pins.pin(v);
                --room[pins.pin(v)];
            }
        int b = 0;
        for (int v = 0; v < n; ++v) {
            if (bucket_of[v] != -1)
                continue;
            while (b < k && room[b] == 0)
                ++b;
            assert(b < k);
            bucket_of[v] = b;
            --room[b];
        }
        return bucket_of;
    }

    if (k == 3)
        return k3_decide(ctx, g, caps, pins);

    if (k <= 6) {
        const bool pair_fill = k == 6;
        const int xhi = pair_fill ? 3 : 2;
        const int xsize = caps[2] + (pair_fill ? caps[3] : 0);
        VertexSet required, pool;
        for (int v = 0; v < n; ++v) {
            if (pins.pinned(v)) {
                if (pins.pin(v) >= 2 && pins.pin(v) <= xhi)
                    required.push_back(v);
            } else {
                pool.push_back(v);
            }
        }
        if (static_cast<int>(required.size()) > xsize)
            return std::nullopt;
        BucketWindows windows = windows_from_pins(pins, n, k);
        std::optional<std::vector<int>> result;
        for_each_superset(required, pool, xsize - static_cast<int>(required.size()),
                          [&](const VertexSet& x) {
                              ++ctx.search.nodes_visited;
                              std::vector<int> fixed(n, -1);
                              std::vector<std::pair<int, VertexSet>> pairs;
                              if (pair_fill) {
                                  pairs.push_back({2, x});
                              } else {
                                  for (int v : x)
                                      fixed[v] = 2;
                              }
                              result = complete_with_pairs(g, caps, fixed, pairs, windows, ctx);
                              return !result.has_value();
                          });
        return result;
    }

    return solve_middle_split(ctx, g, caps, pins);
}

}  // namespace

// --- public operations ------------------------------------------------------

DpResult dp_extendable(const Graph& g, const PartialBucketArrangement& partial,
                       const PinConstraint& pins, DpStats* stats, SearchStats* search)
{
    if (auto bad = partial.validate(g))
        throw std::invalid_argument("invalid partial arrangement: " + *bad);
    if (partial.max_empty_run() >= 3)
        throw std::invalid_argument("partial arrangement has 3 consecutive empty buckets");
    const int n = g.n();
    const int k = partial.capacity.length();

    std::vector<int> fixed(n, -1);
    std::vector<std::pair<int, VertexSet>> pairs;
    for (const auto& r : partial.regions) {
        if (r.hi == r.lo)
            for (int v : r.vertices)
                fixed[v] = r.lo;
        else
            pairs.push_back({r.lo, r.vertices});
    }
    // pins on assigned vertices must agree with their region
    for (int v = 0; v < n; ++v)
        if (pins.pinned(v) && fixed[v] != -1 && fixed[v] != pins.pin(v))
            return {};

    CkContext ctx;
    std::vector<int> caps(partial.capacity.caps().begin(), partial.capacity.caps().end());
    BucketWindows windows = windows_from_pins(pins, n, k);
    auto sol = complete_with_pairs(g, caps, fixed, pairs, windows, ctx);
    if (stats)
        *stats = ctx.dp;
    if (search)
        search->absorb(ctx.search);
    DpResult out;
    out.extendable = sol.has_value();
    if (sol) {
        out.witness = BucketArrangement{std::move(*sol), partial.capacity};
        assert(!validate_bucket_arrangement(g, *out.witness));
    }
    return out;
}

ProducedVectorSet enumerate_produced_vectors(const Graph& g, const CapacityVector& c, int j,
                                             const VertexSet& x, SearchStats* stats)
{
    if (j < 0 || j >= c.length())
        throw std::invalid_argument("bucket index out of range");
    if (static_cast<int>(x.size()) != c[j])
        throw std::invalid_argument("|x| must equal the capacity of bucket j");
    if (c.size() != g.n())
        throw std::invalid_argument("capacity vector size must equal the vertex count");
    CkContext ctx;
    std::vector<int> caps(c.caps().begin(), c.caps().end());
    auto reps = produced_vectors_rep(g, caps, j, x, {}, ctx);
    if (stats)
        stats->absorb(ctx.search);
    ProducedVectorSet out;
    for (const auto& [residual, rep] : reps)
        out.insert(residual);
    return out;
}

std::optional<BucketArrangement> decide_constant_k(const Graph& g, const CapacityVector& c,
                                                   SearchStats* stats)
{
    if (c.length() < 3 || c.length() > 26)
        throw std::invalid_argument("decide_constant_k handles 3 to 26 buckets");
    if (c.size() != g.n())
        throw std::invalid_argument("capacity vector size must equal the vertex count");
    if (!is_connected(g))
        throw std::invalid_argument("decide_constant_k needs a connected graph");
    CkContext ctx;
    std::vector<int> caps(c.caps().begin(), c.caps().end());
    auto sol = solve_ck(ctx, g, caps, {});
    if (stats)
        stats->absorb(ctx.search);
    if (!sol)
        return std::nullopt;
    BucketArrangement out{std::move(*sol), c};
    assert(!validate_bucket_arrangement(g, out));
    return out;
}

ApproxResult approx2_fast(const Graph& g, SearchStats* stats)
{
    ApproxResult out;
    if (g.n() == 0)
        return out;

    SearchStats total;
    auto comps = connected_components(g);
    int ell_m = 0;
    int lower_m = 0;
    std::optional<BucketArrangement> witness;

    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        const int ni = sub.graph.n();
        int ell_i = 0;
        std::optional<BucketArrangement> comp_witness;
        for (int ell = 1; ell <= (ni + 1) / 2 && !comp_witness; ++ell) {
            const int k = (ni + ell - 1) / ell;
            if (k <= 2) {
                auto c = make_capacity_vector(ni, ell, VectorStyle::balanced);
                std::vector<int> bucket_of(ni, 0);
                for (int v = c[0]; v < ni; ++v)
                    bucket_of[v] = 1;
                comp_witness = BucketArrangement{std::move(bucket_of), c};
            } else if (k <= 26) {
                auto style = (k == 8 || k == 10 || k == 12) ? VectorStyle::left_packed
                                                            : VectorStyle::balanced;
                comp_witness =
                    decide_constant_k(sub.graph, make_capacity_vector(ni, ell, style), &total);
            } else {
                auto dec = decide_dc(sub.graph, make_capacity_vector(ni, ell, VectorStyle::balanced));
                total.absorb(dec.stats);
                comp_witness = std::move(dec.arrangement);
            }
            if (comp_witness)
                ell_i = ell;
        }
        assert(comp_witness && "ell = ceil(n/2) is always feasible");
        ell_m = std::max(ell_m, ell_i);
        lower_m = std::max(lower_m, sub.graph.m() > 0 ? ell_i : 0);
        if (comps.size() == 1)
            witness = std::move(comp_witness);
    }

    out.ell_star = ell_m;
    out.lower = lower_m;
    out.upper = 2 * ell_m - 1;
    out.witness = std::move(witness);
    if (stats)
        stats->absorb(total);
    return out;
}

}  // namespace bandwidth
