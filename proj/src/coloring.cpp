#include "blockpath/coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace blockpath {

namespace {

std::vector<uint64_t> underlying_masks(const Digraph& d) {
    std::vector<uint64_t> adj(d.order());
    for (int v = 0; v < d.order(); ++v) adj[v] = d.adj_mask(v);
    return adj;
}

void check_cap(const Digraph& d, int cap, const char* what) {
    if (d.order() > cap)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         std::string(what) + ": order " + std::to_string(d.order()) + " over cap " + std::to_string(cap));
}

struct CliqueSearch {
    const std::vector<uint64_t>& adj;
    std::vector<int> best, cur;
    int target = -1;  // stop as soon as a clique of this size is found

    void expand(uint64_t cand) {
        if (cand == 0) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (target > 0 && static_cast<int>(best.size()) >= target) return;
        while (cand) {
            if (cur.size() + static_cast<size_t>(std::popcount(cand)) <= best.size()) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(v);
            expand(cand & adj[v]);
            cur.pop_back();
            if (target > 0 && static_cast<int>(best.size()) >= target) return;
        }
    }
};

std::vector<int> max_clique_masks(const std::vector<uint64_t>& adj, int n, int target = -1) {
    CliqueSearch cs{adj, {}, {}, target};
    uint64_t all = n == 0 ? 0 : (1ull << n) - 1;
    cs.expand(all);
    return cs.best;
}

// DSATUR greedy upper bound
std::pair<int, std::vector<int>> greedy_coloring(const std::vector<uint64_t>& adj, int n) {
    std::vector<int> color(n, -1);
    std::vector<uint64_t> neighbor_colors(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(neighbor_colors[v]);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = std::countr_one(neighbor_colors[pick]);  // lowest free color
        color[pick] = c;
        used = std::max(used, c + 1);
        uint64_t m = adj[pick];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            neighbor_colors[u] |= 1ull << c;
        }
    }
    return {used, color};
}

// Branch-and-bound k-coloring with DSATUR vertex selection; new colors are
// introduced in order, so color symmetry never branches.
struct KColorSearch {
    const std::vector<uint64_t>& adj;
    int n, k;
    std::vector<int> color;
    std::vector<uint64_t> neighbor_colors;

    bool solve(int colored, int max_used) {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(neighbor_colors[v]);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((neighbor_colors[pick] >> c) & 1) continue;
            color[pick] = c;
            uint64_t changed = 0;
            uint64_t m = adj[pick];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (!((neighbor_colors[u] >> c) & 1)) {
                    neighbor_colors[u] |= 1ull << c;
                    changed |= 1ull << u;
                }
            }
            if (solve(colored + 1, std::max(max_used, c))) return true;
            color[pick] = -1;
            m = changed;
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                neighbor_colors[u] &= ~(1ull << c);
            }
        }
        return false;
    }
};

bool try_k_coloring(const std::vector<uint64_t>& adj, int n, int k, std::vector<int>& out) {
    if (n == 0) {
        out.clear();
        return true;
    }
    if (k <= 0) return false;
    KColorSearch s{adj, n, k, std::vector<int>(n, -1), std::vector<uint64_t>(n, 0)};
    if (!s.solve(0, -1)) return false;
    out = s.color;
    return true;
}

}  // namespace

ChromaticCertificate chromatic_number(const Digraph& d, int cap) {
    check_cap(d, cap, "chromatic_number");
    ChromaticCertificate cert;
    int n = d.order();
    if (n == 0) {
        cert.chi = 0;
        return cert;
    }
    auto adj = underlying_masks(d);
    cert.clique = max_clique_masks(adj, n);
    int lb = static_cast<int>(cert.clique.size());
    auto [ub, greedy] = greedy_coloring(adj, n);
    if (ub == lb) {
        cert.chi = ub;
        cert.coloring = greedy;
        cert.clique_is_evidence = true;
        return cert;
    }
    for (int k = lb; k <= ub; ++k) {
        std::vector<int> coloring;
        if (try_k_coloring(adj, n, k, coloring)) {
            cert.chi = k;
            cert.coloring = coloring;
            cert.clique_is_evidence = (k == lb);
            cert.exhaustive_marker = (k > lb);
            return cert;
        }
    }
    // greedy is always feasible, so the loop cannot fall through
    throw std::logic_error("chromatic_number: search exhausted below greedy bound");
}

std::optional<std::vector<int>> is_k_colorable(const Digraph& d, int k, int cap) {
    check_cap(d, cap, "is_k_colorable");
    if (k < 1)
        throw PreconditionError("is_k_colorable: k must be >= 1");
    int n = d.order();
    std::vector<int> color(n, -1);
    auto adj = underlying_masks(d);
    // plain positional backtracking, new colors introduced in order
    std::function<bool(int, int)> rec = [&](int v, int max_used) -> bool {
        if (v == n) return true;
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            uint64_t m = adj[v] & ((1ull << v) - 1);
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (rec(v + 1, std::max(max_used, c))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!rec(0, -1)) return std::nullopt;
    return color;
}

bool is_proper_coloring(const Digraph& d, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != d.order()) return false;
    for (const auto& [u, v] : d.arcs())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

int clique_number(const Digraph& d, int cap) {
    return static_cast<int>(max_clique(d, cap).size());
}

std::vector<int> max_clique(const Digraph& d, int cap) {
    check_cap(d, cap, "max_clique");
    auto adj = underlying_masks(d);
    return max_clique_masks(adj, d.order());
}

std::optional<std::vector<int>> find_clique_of_size(const Digraph& d, int size, int cap) {
    check_cap(d, cap, "find_clique_of_size");
    auto adj = underlying_masks(d);
    auto c = max_clique_masks(adj, d.order(), size);
    if (static_cast<int>(c.size()) < size) return std::nullopt;
    c.resize(size);
    return c;
}

CriticalResult critical_subdigraph(const Digraph& d, int t, int cap) {
    check_cap(d, cap, "critical_subdigraph");
    if (chromatic_number(d, cap).chi < t)
        throw PreconditionError("critical_subdigraph: chromatic number below target " + std::to_string(t));
    Digraph cur = d;
    std::vector<int> map(d.order());
    for (int i = 0; i < d.order(); ++i) map[i] = i;
    bool deleted = true;
    while (deleted) {
        deleted = false;
        for (int v = 0; v < cur.order(); ++v) {
            uint64_t rest = cur.full_mask() & ~(1ull << v);
            Digraph candidate = cur.induced(rest);
            if (chromatic_number(candidate, cap).chi >= t) {
                std::vector<int> sub_map;
                cur = cur.induced(rest, &sub_map);
                std::vector<int> new_map(cur.order());
                for (int i = 0; i < cur.order(); ++i) new_map[i] = map[sub_map[i]];
                map = std::move(new_map);
                deleted = true;
                break;
            }
        }
    }
    if (chromatic_number(cur, cap).chi != t)
        throw std::logic_error("critical_subdigraph: result chi differs from target");
    for (int v = 0; v < cur.order(); ++v)
        if (cur.underlying_degree(v) < t - 1)
            throw std::logic_error("critical_subdigraph: vertex below minimum degree t-1");
    return {std::move(cur), std::move(map)};
}

std::vector<int> gallai_roy_path(const Digraph& d) {
    int n = d.order();
    if (n == 0) return {};
    // maximal spanning acyclic subdigraph, arcs added in ascending order
    std::vector<uint64_t> acyc(n, 0);
    auto reaches = [&](int from, int to) {
        uint64_t seen = 1ull << from;
        uint64_t frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            uint64_t m = frontier;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                next |= acyc[v];
            }
            next &= ~seen;
            if ((next >> to) & 1) return true;
            seen |= next;
            frontier = next;
        }
        return false;
    };
    for (const auto& [u, v] : d.arcs())
        if (!reaches(v, u)) acyc[u] |= 1ull << v;

    // longest-path levels on the acyclic subdigraph
    std::vector<int> level(n, -1);
    std::function<int(int)> get_level = [&](int v) -> int {
        if (level[v] >= 0) return level[v];
        level[v] = 0;
        int lv = 0;
        for (int u = 0; u < n; ++u)
            if ((acyc[u] >> v) & 1) lv = std::max(lv, get_level(u) + 1);
        return level[v] = lv;
    };
    int top = 0;
    for (int v = 0; v < n; ++v)
        if (get_level(v) > get_level(top)) top = v;

    std::vector<int> path{top};
    while (level[path.back()] > 0) {
        int cur = path.back();
        for (int u = 0; u < n; ++u)
            if (((acyc[u] >> cur) & 1) && level[u] == level[cur] - 1) {
                path.push_back(u);
                break;
            }
    }
    std::reverse(path.begin(), path.end());

    // greedy extension in the full digraph at both ends
    uint64_t on_path = 0;
    for (int v : path) on_path |= 1ull << v;
    for (;;) {
        uint64_t front_cands = d.in_mask(path.front()) & ~on_path;
        if (!front_cands) break;
        int z = std::countr_zero(front_cands);
        path.insert(path.begin(), z);
        on_path |= 1ull << z;
    }
    for (;;) {
        uint64_t back_cands = d.out_mask(path.back()) & ~on_path;
        if (!back_cands) break;
        int z = std::countr_zero(back_cands);
        path.push_back(z);
        on_path |= 1ull << z;
    }
    return path;
}

Lemma21Report check_lemma21(const Digraph& d, int n, int cap) {
    if (n < 2)
        throw PreconditionError("check_lemma21: n must be >= 2");
    check_cap(d, cap, "check_lemma21");
    Lemma21Report r;
    r.n = n;
    for (int v = 0; v < d.order(); ++v) {
        r.max_in_degree = std::max(r.max_in_degree, d.in_degree(v));
        r.max_out_degree = std::max(r.max_out_degree, d.out_degree(v));
    }
    r.clique_number = clique_number(d, cap);
    r.chi = chromatic_number(d, cap).chi;
    bool no_big_clique = r.clique_number <= 2 * n;
    r.applicable_in = r.max_in_degree <= n && no_big_clique;
    r.applicable_out = r.max_out_degree <= n && no_big_clique;
    r.holds_in = r.applicable_in && r.chi <= 2 * n;
    r.holds_out = r.applicable_out && r.chi <= 2 * n;
    return r;
}

}  // namespace blockpath
