#pragma once

// Brute-force family oracle: every subset of the base set, filtered by
// whether its complement splits into disjoint adjacent pairs.

#include "amo/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace amo::oracle {

using Sets = std::set<std::vector<int>>;

// Can `rest` (sorted) be split into adjacent pairs? Pairs are {i, i+1}, plus
// {n, 1} when cyclic.
inline bool tiles(const std::vector<int>& rest, int n, bool cyclic)
{
    if (rest.empty())
        return true;
    const int first = rest.front();
    auto try_pair = [&](int other) {
        if (std::find(rest.begin() + 1, rest.end(), other) == rest.end())
            return false;
        std::vector<int> next(rest.begin() + 1, rest.end());
        next.erase(std::find(next.begin(), next.end(), other));
        return tiles(next, n, cyclic);
    };
    if (try_pair(first + 1))
        return true;
    // The smallest element can only be paired with n across the wrap.
    return cyclic && first == 1 && n >= 3 && try_pair(n);
}

inline Sets brute_force(FamilyKind kind, int n, int k)
{
    const int lo = kind == FamilyKind::OffsetLinear ? 2 : 1;
    const int width = n - lo + 1;
    Sets out;
    if (width < 0)
        return out;
    for (unsigned mask = 0; mask < (1u << width); ++mask) {
        std::vector<int> kept, removed;
        for (int b = 0; b < width; ++b)
            ((mask >> b) & 1u ? kept : removed).push_back(lo + b);
        if (static_cast<int>(removed.size()) == 2 * k && tiles(removed, n, kind == FamilyKind::Cyclic))
            out.insert(kept);
    }
    return out;
}

inline Sets as_sets(const std::vector<IndexSubset>& f)
{
    Sets s;
    for (const auto& i : f)
        s.insert(i.elements());
    return s;
}

} // namespace amo::oracle
