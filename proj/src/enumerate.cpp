#include "blockpath/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace blockpath {

namespace {

// Minimal adjacency encoding over all vertex orderings compatible with an
// isomorphism-invariant partition. Cells are emitted in "staircase" order —
// for each new position t, first the arcs old->t then t->old — so every
// extension appends to the code and lexicographic pruning applies.
struct CanonicalSearch {
    const Digraph& d;
    int n;
    std::vector<int> klass;        // invariant class id per vertex, class ids ordered canonically
    std::vector<int> perm;         // perm[pos] = original vertex
    std::vector<uint8_t> cur, best;
    bool have_best = false;

    explicit CanonicalSearch(const Digraph& dg) : d(dg), n(dg.order()) {}

    void refine_classes() {
        // start from (out-degree, in-degree), refine by neighbor class multisets
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        std::vector<int> cls(n, 0);
        for (int v = 0; v < n; ++v) cls[v] = 0;
        auto assign_classes = [&](std::vector<std::vector<int>>& keys) {
            std::vector<std::vector<int>> sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < n; ++v)
                cls[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
            return static_cast<int>(sorted.size());
        };
        std::vector<std::vector<int>> keys(n);
        for (int v = 0; v < n; ++v) keys[v] = {d.out_degree(v), d.in_degree(v)};
        int nclasses = assign_classes(keys);
        for (int round = 0; round < n; ++round) {
            for (int v = 0; v < n; ++v) {
                std::vector<int> outc, inc;
                uint64_t m = d.out_mask(v);
                while (m) {
                    outc.push_back(cls[std::countr_zero(m)]);
                    m &= m - 1;
                }
                m = d.in_mask(v);
                while (m) {
                    inc.push_back(cls[std::countr_zero(m)]);
                    m &= m - 1;
                }
                std::sort(outc.begin(), outc.end());
                std::sort(inc.begin(), inc.end());
                keys[v] = {cls[v]};
                keys[v].insert(keys[v].end(), outc.begin(), outc.end());
                keys[v].push_back(-1);
                keys[v].insert(keys[v].end(), inc.begin(), inc.end());
            }
            int nc = assign_classes(keys);
            if (nc == nclasses) break;
            nclasses = nc;
        }
        klass = cls;
    }

    // appends the staircase cells for position t
    void emit(int t) {
        int vt = perm[t];
        for (int j = 0; j < t; ++j) cur.push_back(static_cast<uint8_t>(d.has_arc(perm[j], vt)));
        for (int j = 0; j < t; ++j) cur.push_back(static_cast<uint8_t>(d.has_arc(vt, perm[j])));
    }

    // -1 cur < best on the new segment, 0 equal, 1 cur > best
    int compare_segment(size_t from) const {
        for (size_t i = from; i < cur.size(); ++i) {
            if (cur[i] < best[i]) return -1;
            if (cur[i] > best[i]) return 1;
        }
        return 0;
    }

    // A node's comparison status against `best` is stamped with the version
    // at which it was computed. A stale stamp means best was replaced inside
    // this node's own subtree, so the node's prefix equals the new best's.
    int best_version = 0;

    void search(int t, bool less, int stamp, std::vector<uint8_t>& used) {
        bool effective_less = less && stamp == best_version;
        if (t == n) {
            if (!have_best || effective_less) {
                best = cur;
                have_best = true;
                ++best_version;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            // positions are filled class block by class block
            if (klass[v] != klass_order[t]) continue;
            perm[t] = v;
            size_t mark = cur.size();
            emit(t);
            effective_less = less && stamp == best_version;
            bool child_less = effective_less;
            bool prune = false;
            if (have_best && !effective_less) {
                int c = compare_segment(mark);
                if (c > 0) prune = true;
                else if (c < 0) child_less = true;
            }
            if (!prune) {
                used[v] = 1;
                search(t + 1, child_less, best_version, used);
                used[v] = 0;
            }
            cur.resize(mark);
        }
    }

    std::vector<int> klass_order;  // class id expected at each position

    std::string run() {
        refine_classes();
        // canonical class order: sort vertices by class id (ids already canonical)
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return klass[a] < klass[b]; });
        klass_order.resize(n);
        for (int i = 0; i < n; ++i) klass_order[i] = klass[verts[i]];
        perm.assign(n, -1);
        cur.clear();
        cur.reserve(n * (n - 1));
        std::vector<uint8_t> used(n, 0);
        search(0, false, 0, used);

        std::string s;
        s += static_cast<char>(n);
        int nbits = n * (n - 1);
        for (int i = 0; i < nbits; i += 8) {
            uint8_t byte = 0;
            for (int b = 0; b < 8 && i + b < nbits; ++b) byte |= best[i + b] << (7 - b);
            s += static_cast<char>(byte);
        }
        return s;
    }
};

}  // namespace

std::string canonical_form(const Digraph& d, int cap) {
    if (d.order() > cap)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         "canonical_form: order " + std::to_string(d.order()) + " over cap " + std::to_string(cap));
    if (d.order() == 0) return std::string(1, '\0');
    CanonicalSearch cs(d);
    return cs.run();
}

bool isomorphic(const Digraph& a, const Digraph& b, int cap) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    return canonical_form(a, cap) == canonical_form(b, cap);
}

namespace {

// upper-triangle bit encoding of a tournament: bit for pair (i<j) set iff j->i
uint64_t tournament_bits(const Digraph& t) {
    uint64_t bits = 0;
    int p = 0;
    for (int i = 0; i < t.order(); ++i)
        for (int j = i + 1; j < t.order(); ++j, ++p)
            if (t.has_arc(j, i)) bits |= 1ull << p;
    return bits;
}

Digraph tournament_from_bits(int n, uint64_t bits) {
    std::vector<uint64_t> out(n, 0);
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p) {
            if ((bits >> p) & 1)
                out[j] |= 1ull << i;
            else
                out[i] |= 1ull << j;
        }
    return Digraph::from_out_masks(n, out, Mode::oriented);
}

// canonical-form -> compact bits, one entry per isomorphism class
std::map<std::string, uint64_t> tournament_classes(int n, int cap) {
    if (n < 1)
        throw GraphError(GraphError::Kind::not_applicable, "tournament order must be >= 1");
    if (n > cap)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         "enumerate_tournaments: order " + std::to_string(n) + " over cap " + std::to_string(cap));
    std::map<std::string, uint64_t> level;
    level[canonical_form(tournament_from_bits(1, 0), std::max(cap, 1))] = 0;
    for (int s = 2; s <= n; ++s) {
        std::map<std::string, uint64_t> next;
        for (const auto& [form, bits] : level) {
            Digraph base = tournament_from_bits(s - 1, bits);
            // add vertex s-1; orient each pair (j, s-1)
            for (uint64_t orient = 0; orient < (1ull << (s - 1)); ++orient) {
                std::vector<uint64_t> out(s, 0);
                for (int u = 0; u < s - 1; ++u) out[u] = base.out_mask(u);
                for (int j = 0; j < s - 1; ++j) {
                    if ((orient >> j) & 1)
                        out[j] |= 1ull << (s - 1);
                    else
                        out[s - 1] |= 1ull << j;
                }
                Digraph cand = Digraph::from_out_masks(s, out, Mode::oriented);
                std::string f = canonical_form(cand, std::max(cap, s));
                next.emplace(std::move(f), tournament_bits(cand));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

void for_each_tournament(int n, const std::function<void(const Digraph&)>& cb, int cap) {
    auto classes = tournament_classes(n, cap);
    for (const auto& [form, bits] : classes) cb(tournament_from_bits(n, bits));
}

std::vector<Digraph> enumerate_tournaments(int n, int cap) {
    std::vector<Digraph> out;
    for_each_tournament(n, [&](const Digraph& t) { out.push_back(t); }, cap);
    return out;
}

uint64_t count_tournaments(int n, int cap) {
    uint64_t c = 0;
    for_each_tournament(n, [&](const Digraph&) { ++c; }, cap);
    return c;
}

uint64_t labeled_digraph_count(int n, Mode mode) {
    uint64_t total = 1;
    for (int p = 0; p < pair_count(n); ++p) total *= pair_states(mode);
    return total;
}

uint64_t for_each_labeled_digraph(int n, Mode mode, const std::function<bool(const Digraph&)>& cb,
                                  int cap, int shard_digit) {
    if (n > cap)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         "labeled enumeration: order " + std::to_string(n) + " over cap " + std::to_string(cap));
    int P = pair_count(n);
    uint64_t s = pair_states(mode);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(P);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> digit(P, 0);
    int first = 0;
    if (shard_digit >= 0) {
        if (shard_digit >= static_cast<int>(s))
            throw GraphError(GraphError::Kind::not_applicable, "shard digit out of range");
        if (P == 0) {
            // order <= 1: single instance, only shard 0 carries it
            if (shard_digit != 0) return 0;
        } else {
            digit[0] = shard_digit;
            first = 1;
        }
    }
    uint64_t visited = 0;
    std::vector<uint64_t> out(n, 0);
    while (true) {
        std::fill(out.begin(), out.end(), 0);
        for (int p = 0; p < P; ++p) {
            auto [u, v] = pairs[p];
            switch (digit[p]) {
                case 1: out[u] |= 1ull << v; break;
                case 2: out[v] |= 1ull << u; break;
                case 3:
                    out[u] |= 1ull << v;
                    out[v] |= 1ull << u;
                    break;
                default: break;
            }
        }
        ++visited;
        if (!cb(Digraph::from_out_masks(n, out, mode))) return visited;
        // odometer over digits first..P-1 (digit 0 fixed when sharded)
        int p = P - 1;
        while (p >= first && digit[p] == static_cast<int>(s) - 1) digit[p--] = 0;
        if (p < first) break;
        ++digit[p];
    }
    return visited;
}

std::vector<Digraph> enumerate_digraphs_deduped(int n, Mode mode, int cap) {
    if (n > cap)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         "deduped enumeration: order " + std::to_string(n) + " over cap " + std::to_string(cap));
    std::map<std::string, Digraph> classes;
    for_each_labeled_digraph(n, mode, [&](const Digraph& d) {
        classes.emplace(canonical_form(d, std::max(cap, n)), d);
        return true;
    }, std::max(cap, n));
    std::vector<Digraph> out;
    out.reserve(classes.size());
    for (auto& [form, d] : classes) out.push_back(std::move(d));
    return out;
}

}  // namespace blockpath
