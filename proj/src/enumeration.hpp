#pragma once

#include <functional>
#include <numeric>

#include "bandwidth/backtrack.hpp"

namespace bandwidth::detail {

// Lexicographic size-`size` subsets of pool, each unioned with required.
// visit returns false to stop; the function returns false iff stopped.
inline bool for_each_superset(const VertexSet& required, const VertexSet& pool, int size,
                              const std::function<bool(const VertexSet&)>& visit)
{
    if (size < 0 || size > static_cast<int>(pool.size()))
        return true;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        VertexSet x = required;
        for (int i : idx)
            x.push_back(pool[i]);
        std::sort(x.begin(), x.end());
        if (!visit(x))
            return false;
        int j = size - 1;
        while (j >= 0 && idx[j] == static_cast<int>(pool.size()) - size + j)
            --j;
        if (j < 0)
            return true;
        ++idx[j];
        for (int t = j + 1; t < size; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

inline BucketWindows windows_from_pins(const PinConstraint& pins, int n, int k)
{
    BucketWindows w;
    if (!pins.any())
        return w;
    w.assign(n, {0, k - 1});
    for (int v = 0; v < n && v < static_cast<int>(pins.pin_of.size()); ++v)
        if (pins.pin_of[v] >= 0)
            w[v] = {pins.pin_of[v], pins.pin_of[v]};
    return w;
}

inline int floor_sqrt(int n)
{
    int r = 0;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

}  // namespace bandwidth::detail
