#pragma once

// Test-local brute-force oracles, kept independent of the library's search
// paths on purpose.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "blockpath/digraph.hpp"
#include "blockpath/pattern.hpp"

namespace oracle {

using blockpath::Digraph;
using blockpath::BlockPattern;
using blockpath::Direction;

// isomorphism by trying every vertex permutation
inline bool brute_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v) {
                if (u == v) continue;
                if (a.has_arc(u, v) != b.has_arc(perm[u], perm[v])) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// pattern containment by enumerating injective vertex sequences
inline bool brute_contains(const Digraph& d, const BlockPattern& p) {
    int n = d.order();
    int order = p.order();
    if (order > n) return false;
    std::vector<int> seq;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        int pos = static_cast<int>(seq.size());
        if (pos == order) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (pos > 0) {
                int prev = seq[pos - 1];
                bool need_fwd = p.arc_direction(pos - 1) == Direction::forward;
                bool ok = need_fwd ? d.has_arc(prev, v) : d.has_arc(v, prev);
                if (!ok) continue;
            }
            used[v] = true;
            seq.push_back(v);
            if (rec()) return true;
            seq.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec();
}

// chromatic number by the smallest k admitting any proper assignment
inline int brute_chromatic(const Digraph& d) {
    int n = d.order();
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    std::function<bool(int, int)> feasible = [&](int v, int k) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (color[u] == c && ((d.adj_mask(v) >> u) & 1)) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (feasible(v + 1, k)) return true;
            color[v] = -1;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(0, k)) return k;
    }
    return n;
}

}  // namespace oracle
