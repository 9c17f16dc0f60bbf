#include "blockpath/finders.hpp"

#include <algorithm>
#include <bit>

#include "blockpath/gseq.hpp"

namespace blockpath {

namespace {

std::vector<int> bits_ascending(uint64_t mask) {
    return mask_to_vertices(mask);
}

uint64_t path_mask(const std::vector<int>& path) {
    uint64_t m = 0;
    for (int v : path) m |= 1ull << v;
    return m;
}

void remap_in_place(std::vector<int>& vs, const std::vector<int>& map) {
    for (int& v : vs) v = map[v];
}

void remap_trace(ProofTrace& t, const std::vector<int>& map) {
    for (auto& step : t.steps) {
        for (auto& [name, vs] : step.sets) remap_in_place(vs, map);
        remap_in_place(step.path_so_far, map);
    }
}

[[noreturn]] void inconsistent(ProofTrace& trace, const std::string& step, const std::string& what) {
    trace.terminal = "internal-inconsistency: " + what;
    trace.add(step, "INCONSISTENT", what);
    throw InternalInconsistency(what, trace);
}

// All proof-guided constructions funnel through here: only sequences that
// re-verify are ever returned.
struct Emitter {
    const Digraph& host;
    BlockPattern target;
    std::optional<PathWitness> out;

    bool try_emit(std::vector<int> seq) {
        if (out) return true;
        PathWitness w{std::move(seq), target};
        if (verify_witness(host, w)) {
            out = std::move(w);
            return true;
        }
        return false;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// three-block decomposition (chromatic threshold g(m,i))
// ---------------------------------------------------------------------------

namespace {

BlockPattern l23_target(int k, int i, int m) {
    int mid = m - 1 - k - i;
    if (i == 0) return two_block(k, mid);
    return three_block(k, mid, i);
}

PathWitness l23_recurse(const Digraph& d, int k, int i, int m, ProofTrace& trace, int depth, int cap);

PathWitness l23_base(const Digraph& d, int k, int i, int m, ProofTrace& trace, int depth) {
    BlockPattern target = l23_target(k, i, m);
    auto w = find_pattern(d, target);
    if (!w)
        inconsistent(trace, "base" + std::to_string(depth),
                     i == 0 ? "two-block containment failed below threshold g(m,0)"
                            : "order-4 three-block containment failed at chi >= 4");
    auto& st = trace.add("base" + std::to_string(depth), "BASE",
                         "external containment theorem, substituted by exhaustive matcher");
    st.sets["host"] = bits_ascending(d.full_mask());
    st.path_so_far = w->vertices;
    return *w;
}

PathWitness l23_recurse(const Digraph& d, int k, int i, int m, ProofTrace& trace, int depth, int cap) {
    std::string id = "m" + std::to_string(m) + ".i" + std::to_string(i);
    if (i == 0 || (m == 4 && i == 1)) return l23_base(d, k, i, m, trace, depth);

    // H: out-degree at least m-2; H': the rest
    uint64_t h_mask = 0;
    for (int v = 0; v < d.order(); ++v)
        if (d.out_degree(v) >= m - 2) h_mask |= 1ull << v;
    uint64_t hp_mask = d.full_mask() & ~h_mask;
    std::vector<int> h_map, hp_map;
    Digraph H = d.induced(h_mask, &h_map);
    Digraph Hp = d.induced(hp_mask, &hp_map);

    auto& split = trace.add("split." + id, "DEGREE_SPLIT", "out-degree threshold m-2 partitions the host");
    split.sets["H"] = bits_ascending(h_mask);
    split.sets["Hprime"] = bits_ascending(hp_mask);

    int chi_h = chromatic_number(H, cap).chi;
    if (chi_h >= g(m - 1, i - 1)) {
        // recurse for the shorter third block, then append one out-arc
        ProofTrace subtrace;
        PathWitness q = l23_recurse(H, k, i - 1, m - 1, subtrace, depth + 1, cap);
        remap_trace(subtrace, h_map);
        for (auto& st : subtrace.steps) trace.steps.push_back(std::move(st));
        remap_in_place(q.vertices, h_map);

        BlockPattern target = l23_target(k, i, m);
        Emitter em{d, target, std::nullopt};
        auto try_extend = [&](const PathWitness& qw) {
            uint64_t qmask = path_mask(qw.vertices);
            int v = qw.vertices.back();
            for (int u : bits_ascending(d.out_mask(v) & ~qmask)) {
                auto seq = qw.vertices;
                seq.push_back(u);
                if (em.try_emit(std::move(seq))) return true;
            }
            return false;
        };
        if (!try_extend(q)) {
            // the first witness may be saturated; any other witness of the
            // same sub-pattern in H serves the step equally
            BlockPattern sub = l23_target(k, i - 1, m - 1);
            for (const auto& alt_h : find_all_patterns(H, sub, std::max(8, H.order()))) {
                PathWitness alt{alt_h.vertices, alt_h.pattern};
                remap_in_place(alt.vertices, h_map);
                if (try_extend(alt)) break;
            }
        }
        if (!em.out)
            inconsistent(trace, "extend." + id, "no out-arc extends any sub-path found in H");
        auto& st = trace.add("extend." + id, "RECURSE_H", "end vertex has out-degree >= m-2, extension arc exists");
        st.path_so_far = em.out->vertices;
        return *em.out;
    }

    // chi(H) below the recursion threshold forces chi(H') > 2(m-3), which
    // yields a complete subgraph of order 2m-5 hosting the pattern
    int chi_hp = chromatic_number(Hp, cap).chi;
    if (chi_hp <= 2 * (m - 3))
        inconsistent(trace, "chi." + id, "chi(H) + chi(H') below g(m,i) yet chi(D) meets it");
    auto clique = find_clique_of_size(Hp, 2 * m - 5, cap);
    if (!clique)
        inconsistent(trace, "clique." + id,
                     "chi(H') exceeds 2(m-3) with out-degrees < m-2 but no K_{2m-5} found");
    std::vector<int> clique_in_d(clique->size());
    for (size_t j = 0; j < clique->size(); ++j) clique_in_d[j] = hp_map[(*clique)[j]];
    std::vector<int> t_map;
    Digraph T = d.induced(vertices_to_mask(clique_in_d, d.order()), &t_map);
    auto w = find_pattern(T, l23_target(k, i, m));
    if (!w)
        inconsistent(trace, "tournament." + id, "order-(2m-5) complete host misses the pattern");
    remap_in_place(w->vertices, t_map);
    auto& st = trace.add("tournament." + id, "TOURNAMENT_HPRIME",
                         "external tournament containment, substituted by exhaustive matcher");
    st.sets["clique"] = clique_in_d;
    st.path_so_far = w->vertices;
    return *w;
}

}  // namespace

FinderResult find_three_block_decomposition(const Digraph& d, int k, int i, int m, int cap) {
    if (!g_in_domain(m, i))
        throw PreconditionError("(m,i) outside the g domain");
    if (k < 1 || k > m - 2 - i)
        throw PreconditionError("k must satisfy 1 <= k <= m-2-i");
    if (i >= 1 && d.has_digon())
        throw PreconditionError("three-block finder requires a digon-free host");
    ProofTrace trace;
    int chi = chromatic_number(d, cap).chi;
    if (chi < g(m, i))
        throw PreconditionError("chromatic number " + std::to_string(chi) + " below threshold g = " +
                                std::to_string(g(m, i)));
    auto& st = trace.add("threshold", "ENTRY", "host chromatic number meets g(m,i)");
    st.sets["host"] = bits_ascending(d.full_mask());
    PathWitness w = l23_recurse(d, k, i, m, trace, 0, cap);
    if (!verify_witness(d, w))
        inconsistent(trace, "final", "constructed witness failed verification");
    trace.has_witness = true;
    return {std::move(w), std::move(trace)};
}

FinderResult find_reversed_three_block(const Digraph& d, int k, int i, int m, int cap) {
    FinderResult r = find_three_block_decomposition(d.reversed(), k, i, m, cap);
    r.witness.pattern = flip(r.witness.pattern);
    auto& st = r.trace.add("reversal", "REVERSED", "same vertex sequence realizes the flipped pattern");
    st.path_so_far = r.witness.vertices;
    if (!verify_witness(d, r.witness))
        inconsistent(r.trace, "reversal", "reversed witness failed verification in the original host");
    return r;
}

// ---------------------------------------------------------------------------
// P(1,l,1) with l >= k at chi >= k+4
// ---------------------------------------------------------------------------

FinderResult find_p1l1_at_least(const Digraph& d, int k, int cap) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    ProofTrace trace;
    int chi = chromatic_number(d, cap).chi;
    if (chi < k + 4)
        throw PreconditionError("chromatic number " + std::to_string(chi) + " below k+4");

    auto crit = critical_subdigraph(d, k + 4, cap);
    const Digraph& C = crit.sub;
    auto& cst = trace.add("criticalize", "CRITICALIZE", "minimum underlying degree k+3 in a (k+4)-critical host");
    cst.sets["critical"] = crit.vertex_map;

    auto seed = find_pattern(C, two_block(k, 1));
    if (!seed)
        inconsistent(trace, "seed", "two-block seed P(k,1) missing at chi = k+4");
    // xs holds the forward block x_1..x_{s+1}; y caps the backward arc
    std::vector<int> xs(seed->vertices.begin(), seed->vertices.end() - 1);
    int y = seed->vertices.back();

    uint64_t on_path = path_mask(xs) | (1ull << y);
    int exit_kind = -1;  // 0: out-neighbor off path, 1: forward chord, 2: backward chord
    int exit_vertex = -1;
    for (;;) {
        uint64_t front_in = C.in_mask(xs.front()) & ~on_path;
        if (front_in) {
            int z = std::countr_zero(front_in);
            xs.insert(xs.begin(), z);
            on_path |= 1ull << z;
            continue;
        }
        uint64_t front_out = C.out_mask(xs.front()) & ~on_path;
        if (front_out) {
            exit_kind = 0;
            exit_vertex = std::countr_zero(front_out);
        }
        break;
    }
    int s = static_cast<int>(xs.size()) - 1;
    auto& mst = trace.add("maximal_seed", "EXTEND_FRONT", "front extension until every in-neighbor lies on the path");
    mst.sets["P"] = xs;
    mst.sets["y"] = {y};

    Emitter em{C, three_block(1, 1, 1), std::nullopt};
    std::vector<int> seq;
    if (exit_kind == 0) {
        // [y, x_{s+1}, ..., x_1, z] realizes P(1, s, 1)
        seq.push_back(y);
        for (int t = s; t >= 0; --t) seq.push_back(xs[t]);
        seq.push_back(exit_vertex);
        em.target = three_block(1, s, 1);
    } else {
        int i = -1;  // minimal index >= 3 (1-based) with x_i adjacent to x_1
        for (int t = 2; t <= s; ++t)
            if ((C.adj_mask(xs[0]) >> xs[t]) & 1) {
                i = t + 1;
                break;
            }
        if (i < 0)
            inconsistent(trace, "chord", "front vertex has no path neighbor beyond x_2 despite degree k+3");
        if (C.has_arc(xs[0], xs[i - 1])) {
            exit_kind = 1;
            // [y, x_{s+1}, ..., x_i, x_1, x_2] realizes P(1, s+2-i, 1)
            seq.push_back(y);
            for (int t = s; t >= i - 1; --t) seq.push_back(xs[t]);
            seq.push_back(xs[0]);
            seq.push_back(xs[1]);
            em.target = three_block(1, s + 2 - i, 1);
        } else {
            exit_kind = 2;
            // [y, x_{s+1}, ..., x_i, x_1] realizes P(1, s+1-i, 1)
            seq.push_back(y);
            for (int t = s; t >= i - 1; --t) seq.push_back(xs[t]);
            seq.push_back(xs[0]);
            em.target = three_block(1, s + 1 - i, 1);
        }
    }
    if (em.target.blocks[1] < k)
        inconsistent(trace, "exit", "middle block below k despite the neighbor count bound");
    if (!em.try_emit(std::move(seq)))
        inconsistent(trace, "exit", "exit construction failed verification");

    static const char* kExitNames[] = {"EXIT_OUT_NEIGHBOR", "EXIT_FORWARD_CHORD", "EXIT_BACKWARD_CHORD"};
    auto& est = trace.add("exit", kExitNames[exit_kind],
                          "all neighbors of the front vertex lie on the path; the minimal chord closes the pattern");
    est.path_so_far = em.out->vertices;

    PathWitness w = *em.out;
    remap_in_place(w.vertices, crit.vertex_map);
    remap_trace(trace, crit.vertex_map);
    // the criticalize step stores original labels already; restore it
    trace.steps[0].sets["critical"] = crit.vertex_map;
    if (!verify_witness(d, w))
        inconsistent(trace, "final", "witness failed verification in the original host");
    trace.has_witness = true;
    return {std::move(w), std::move(trace)};
}

// ---------------------------------------------------------------------------
// P(1,k,1) at chi >= 3k+4, via origins of P(k,1)
// ---------------------------------------------------------------------------

FinderResult find_p1k1_via_origins(const Digraph& d, int k, int cap) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    ProofTrace trace;
    int chi = chromatic_number(d, cap).chi;
    if (chi < 3 * k + 4)
        throw PreconditionError("chromatic number " + std::to_string(chi) + " below 3k+4");

    BlockPattern seed_pat = two_block(k, 1);
    uint64_t u_mask = 0;
    for (int v = 0; v < d.order(); ++v)
        if (find_pattern_from(d, seed_pat, v)) u_mask |= 1ull << v;
    auto& ust = trace.add("origins", "ORIGINS", "set of all origins of a P(k,1)");
    ust.sets["U"] = bits_ascending(u_mask);
    if (!u_mask)
        inconsistent(trace, "origins", "no P(k,1) origin at chi >= 3k+4");

    Emitter em{d, three_block(1, k, 1), std::nullopt};
    for (int u : bits_ascending(u_mask)) {
        if (d.out_degree(u) < k + 2) continue;
        auto pu = find_pattern_from(d, seed_pat, u);
        uint64_t pmask = path_mask(pu->vertices);
        for (int z : bits_ascending(d.out_mask(u) & ~pmask)) {
            // [p_{k+1}, p_k, ..., p_0 = u, z]
            std::vector<int> seq;
            seq.push_back(pu->vertices.back());
            for (int t = k; t >= 0; --t) seq.push_back(pu->vertices[t]);
            seq.push_back(z);
            if (em.try_emit(std::move(seq))) {
                auto& st = trace.add("extend", "EXTEND_ORIGIN",
                                     "origin with out-degree above k+1 leaves the seed path");
                st.sets["u"] = {u};
                st.sets["P_u"] = pu->vertices;
                st.sets["z"] = {z};
                st.path_so_far = em.out->vertices;
                trace.has_witness = true;
                return {*em.out, std::move(trace)};
            }
        }
    }

    // every origin has out-degree <= k+1: within U out-degrees stay <= k+1,
    // so chi(U) > 2k+2 forces a K_{2k+3}
    std::vector<int> u_map;
    Digraph U = d.induced(u_mask, &u_map);
    int chi_u = chromatic_number(U, cap).chi;
    auto& cst = trace.add("chiU", "LOW_OUT_DEGREE", "all origins have out-degree at most k+1");
    cst.sets["U"] = bits_ascending(u_mask);
    if (chi_u > 2 * k + 2) {
        auto clique = find_clique_of_size(U, 2 * k + 3, cap);
        if (!clique)
            inconsistent(trace, "clique", "chi(U) above 2k+2 with bounded out-degrees but no K_{2k+3}");
        std::vector<int> cl(clique->size());
        for (size_t j = 0; j < cl.size(); ++j) cl[j] = u_map[(*clique)[j]];
        std::vector<int> t_map;
        Digraph T = d.induced(vertices_to_mask(cl, d.order()), &t_map);
        auto w = find_pattern(T, three_block(1, k, 1));
        if (!w)
            inconsistent(trace, "clique", "order-(2k+3) complete host misses P(1,k,1)");
        remap_in_place(w->vertices, t_map);
        auto& st = trace.add("clique", "CLIQUE_TOURNAMENT",
                             "external tournament containment, substituted by exhaustive matcher");
        st.sets["clique"] = cl;
        st.path_so_far = w->vertices;
        trace.has_witness = true;
        return {*w, std::move(trace)};
    }
    // chi(D-U) >= k+2 would host a P(k,1) whose origin escapes U
    inconsistent(trace, "closure", "origin set closure violated: chi(U) <= 2k+2 with no extendable origin");
}

// ---------------------------------------------------------------------------
// P(1,k,1) at chi >= 2k+1 (k >= 2): in-degree partition case tree
// ---------------------------------------------------------------------------

namespace {

struct T33 {
    const Digraph& C;
    int k;
    uint64_t d1_mask, d2_mask;
    ProofTrace& trace;
    Emitter em;

    T33(const Digraph& host, int kk, uint64_t d1, uint64_t d2, ProofTrace& tr)
        : C(host), k(kk), d1_mask(d1), d2_mask(d2), trace(tr), em{host, three_block(1, kk, 1), std::nullopt} {}

    bool emit(std::vector<int> seq) { return em.try_emit(std::move(seq)); }

    // [cap_in, cap, q_k, ..., q_1, tail]: the workhorse shape; chain walks a
    // directed path in reverse, giving the k-arc middle block
    std::vector<int> chain_seq(int cap_in, int cap, const std::vector<int>& q, int from, int down_to, int tail) const {
        std::vector<int> seq{cap_in, cap};
        for (int t = from; t >= down_to; --t) seq.push_back(q[t]);
        seq.push_back(tail);
        return seq;
    }

    // Directed path q (k vertices) inside D2 whose end has two out-neighbors
    // in D1. Every branch of the short-path argument lands on a verified
    // emission; exhaustion is an inconsistency handled by the caller.
    bool two_caps(const std::vector<int>& q, uint64_t caps_mask) {
        uint64_t qmask = path_mask(q);
        auto caps = bits_ascending(caps_mask);
        int kk = static_cast<int>(q.size());
        for (size_t ai = 0; ai < caps.size(); ++ai) {
            for (size_t bi = 0; bi < caps.size(); ++bi) {
                if (ai == bi) continue;
                int a1 = caps[ai], a2 = caps[bi];
                uint64_t v1 = C.out_mask(q[0]) & ~qmask;
                uint64_t v_free = v1 & ~(1ull << a1) & ~(1ull << a2);
                if (v_free) {
                    int v = std::countr_zero(v_free);
                    for (int cap_v : {a1, a2}) {
                        uint64_t zs = C.in_mask(cap_v) & ~qmask & ~(1ull << v);
                        for (int z : bits_ascending(zs))
                            if (emit(chain_seq(z, cap_v, q, kk - 1, 0, v))) return true;
                    }
                    // in-neighborhood equalities force the crossed pair
                    if (emit(chain_seq(v, a2, q, kk - 1, 0, a1))) return true;
                } else if ((v1 >> a2) & 1) {
                    uint64_t zs = C.in_mask(a1) & ~qmask & ~(1ull << a2);
                    for (int z : bits_ascending(zs))
                        if (emit(chain_seq(z, a1, q, kk - 1, 0, a2))) return true;
                    uint64_t xsd = C.in_mask(a2) & ~qmask & ~(1ull << a1);
                    for (int x : bits_ascending(xsd))
                        if (emit(chain_seq(x, a2, q, kk - 1, 0, a1))) return true;
                }
            }
        }
        return false;
    }

    // rotation labels: rot[i] = x'_{i+1}; r = |rot| - k
    // single D1 out-neighbor a1 at the rotation's end vertex
    bool claim1_single(const std::vector<int>& rot, int a1) {
        int len = static_cast<int>(rot.size());
        int r = len - k;
        uint64_t p1 = 0;  // [x_r, x_{r+k}]
        for (int t = r - 1; t < len; ++t) p1 |= 1ull << rot[t];
        uint64_t pm = path_mask(rot);
        int xr = rot[r - 1], xr1 = rot[r], xrk = rot[len - 1];

        if (!C.has_arc(xr, a1)) {
            auto ws = bits_ascending(C.in_mask(a1) & ~p1);
            if (C.has_arc(rot[len - 2], a1)) {
                // chain capped at x_{r+k-1}
                for (int u : bits_ascending(C.out_mask(xr) & ~p1 & ~(1ull << a1)))
                    for (int w : ws) {
                        if (w == u) continue;
                        if (emit(chain_seq(w, a1, rot, len - 2, r - 1, u))) return true;
                    }
                for (int w : ws)  // forced (x_r, x_{r+2}) chord closes it
                    if (emit(closed_chord_seq(rot, r, len, w, a1))) return true;
            } else {
                for (int u : bits_ascending(C.out_mask(xr1) & ~p1 & ~(1ull << a1)))
                    for (int w : ws) {
                        if (w == u) continue;
                        if (emit(chain_seq(w, a1, rot, len - 1, r, u))) return true;
                    }
                // N+(x_{r+1}) pinned to [x_{r+2},x_{r+k}] and a1
                for (int u : bits_ascending(C.out_mask(xr) & ~p1 & ~(1ull << a1))) {
                    for (int w : ws) {
                        if (w == u) continue;
                        if (k == 2) {
                            if (emit({w, a1, xr1, xr, u})) return true;
                        } else {
                            // skip x_{r+2}: chain x_{r+k}..x_{r+3}, then x_{r+1}, x_r
                            std::vector<int> seq{w, a1};
                            for (int t = len - 1; t >= r + 2; --t) seq.push_back(rot[t]);
                            seq.push_back(xr1);
                            seq.push_back(xr);
                            seq.push_back(u);
                            if (emit(std::move(seq))) return true;
                        }
                    }
                }
                for (int w : ws)
                    if (emit(closed_chord_seq(rot, r, len, w, a1))) return true;
            }
        } else {
            // x_r -> a1 exists
            for (int u : bits_ascending(C.out_mask(xr1) & ~p1 & ~(1ull << a1)))
                if (emit(chain_seq(xr, a1, rot, len - 1, r, u))) return true;
            // equality pins (x_{r+1}, a1); low out-chords of the end close it
            for (int j = r - 1; j >= 2; --j) {
                if (!C.has_arc(xrk, rot[j - 1])) continue;
                if (emit(chain_seq(rot[j - 2], rot[j - 1], rot, len - 1, r, a1))) return true;
            }
        }
        (void)pm;
        return false;
    }

    // [w, a1, x_{r+k}, ..., x_{r+2}, x_r, x_{r+1}] via the (x_r, x_{r+2}) chord
    std::vector<int> closed_chord_seq(const std::vector<int>& rot, int r, int len, int w, int a1) const {
        std::vector<int> seq{w, a1};
        for (int t = len - 1; t >= r + 1; --t) seq.push_back(rot[t]);
        seq.push_back(rot[r - 1]);
        seq.push_back(rot[r]);
        return seq;
    }
};

}  // namespace

FinderResult find_p1k1(const Digraph& d, int k, int cap) {
    if (k < 2) throw PreconditionError("k must be >= 2");
    if (d.has_digon())
        throw PreconditionError("P(1,k,1) finder requires a digon-free host");
    ProofTrace trace;
    int chi0 = chromatic_number(d, cap).chi;
    if (chi0 < 2 * k + 1)
        throw PreconditionError("chromatic number " + std::to_string(chi0) + " below 2k+1");

    auto crit = critical_subdigraph(d, 2 * k + 1, cap);
    const Digraph& C = crit.sub;
    auto& cst = trace.add("criticalize", "CRITICALIZE", "critical host: minimum underlying degree 2k");
    cst.sets["critical"] = crit.vertex_map;

    uint64_t d1 = 0;
    for (int v = 0; v < C.order(); ++v)
        if (C.in_degree(v) >= k + 1) d1 |= 1ull << v;
    uint64_t d2 = C.full_mask() & ~d1;
    auto& pst = trace.add("partition", "PARTITION", "split on in-degree k+1; D2 vertices keep out-degree >= k");
    pst.sets["D1"] = bits_ascending(d1);
    pst.sets["D2"] = bits_ascending(d2);

    std::vector<int> d2_map, d1_map;
    Digraph D2 = C.induced(d2, &d2_map);
    Digraph D1 = C.induced(d1, &d1_map);
    int chi2 = chromatic_number(D2, cap).chi;

    T33 ctx(C, k, d1, d2, trace);

    auto finish = [&](const char* step, const char* branch, const char* anchor) -> FinderResult {
        auto& st = trace.add(step, branch, anchor);
        st.path_so_far = ctx.em.out->vertices;
        PathWitness w = *ctx.em.out;
        remap_in_place(w.vertices, crit.vertex_map);
        remap_trace(trace, crit.vertex_map);
        trace.steps[0].sets["critical"] = crit.vertex_map;
        if (!verify_witness(d, w))
            inconsistent(trace, "final", "witness failed verification in the original host");
        trace.has_witness = true;
        return {std::move(w), std::move(trace)};
    };

    if (chi2 >= k) {
        // directed path machinery inside D2
        auto sub_path = gallai_roy_path(D2);
        std::vector<int> P(sub_path.size());
        for (size_t t = 0; t < sub_path.size(); ++t) P[t] = d2_map[sub_path[t]];

        auto extend_in_d2 = [&](std::vector<int>& path) {
            uint64_t on = path_mask(path);
            for (;;) {
                uint64_t front = C.in_mask(path.front()) & d2 & ~on;
                if (front) {
                    int z = std::countr_zero(front);
                    path.insert(path.begin(), z);
                    on |= 1ull << z;
                    continue;
                }
                uint64_t back = C.out_mask(path.back()) & d2 & ~on;
                if (back) {
                    int z = std::countr_zero(back);
                    path.push_back(z);
                    on |= 1ull << z;
                    continue;
                }
                break;
            }
        };
        extend_in_d2(P);

        for (;;) {  // restarts when a longer D2 path appears
            int len = static_cast<int>(P.size());
            if (len < k)
                inconsistent(trace, "caseA", "D2 path shorter than its chromatic guarantee");
            auto& ast = trace.add("caseA", "CASE_D2", "non-extendable directed path in D2");
            ast.sets["P"] = P;

            if (len == k) {
                uint64_t caps = C.out_mask(P.back()) & d1;
                if (std::popcount(caps) < 2)
                    inconsistent(trace, "short", "path end lacks two D1 out-neighbors at length k-1");
                if (ctx.two_caps(P, caps)) return finish("short", "SHORT_PATH", "length k-1 path; crossed cap pair");
                inconsistent(trace, "short", "short-path cap machinery exhausted");
            }

            int r = len - k;
            int end = P.back();
            uint64_t pm = path_mask(P);

            uint64_t a_set = C.out_mask(end) & d1;
            int a_count = std::popcount(a_set);
            if (a_count >= 2) {
                std::vector<int> q(P.end() - k, P.end());
                if (ctx.two_caps(q, a_set)) return finish("claim1", "END_TWO_CAPS", "path end with two D1 out-neighbors");
                inconsistent(trace, "claim1", "two-cap machinery exhausted at the path end");
            }
            if (a_count == 1) {
                int a1 = std::countr_zero(a_set);
                if (ctx.claim1_single(P, a1))
                    return finish("claim1", "END_SINGLE_CAP", "path end with one D1 out-neighbor");
                inconsistent(trace, "claim1", "single-cap machinery exhausted at the path end");
            }

            if (!C.has_arc(end, P[0])) {
                // claim 2: the (end, x_r) chord forces the wrap arc
                if (r >= 2 && C.has_arc(end, P[r - 1])) {
                    int xr1 = P[r], xrm1 = P[r - 2];
                    uint64_t p2k = 0;
                    for (int t = r + 1; t < len; ++t) p2k |= 1ull << P[t];  // [x_{r+2},x_{r+k}]
                    for (int u : bits_ascending(C.out_mask(xr1) & ~p2k & ~(1ull << xrm1) & ~pm)) {
                        std::vector<int> seq{xrm1, P[r - 1]};
                        for (int t = len - 1; t >= r; --t) seq.push_back(P[t]);
                        seq.push_back(u);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim2", "WRAP_FORCED", "chord to x_r without the wrap arc");
                    }
                    // also allow u on the low path segment
                    for (int u : bits_ascending(C.out_mask(xr1) & pm & ~p2k & ~(1ull << xrm1) & ~(1ull << P[r - 1]) &
                                                ~(1ull << xr1))) {
                        std::vector<int> seq{xrm1, P[r - 1]};
                        for (int t = len - 1; t >= r; --t) seq.push_back(P[t]);
                        seq.push_back(u);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim2", "WRAP_FORCED", "chord to x_r without the wrap arc");
                    }
                    for (int j = r - 2; j >= 2; --j) {
                        if (!C.has_arc(end, P[j - 1])) continue;
                        std::vector<int> seq{P[j - 2], P[j - 1]};
                        for (int t = len - 1; t >= r; --t) seq.push_back(P[t]);
                        seq.push_back(xrm1);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim2", "WRAP_FORCED", "low chord of the end closes the pattern");
                    }
                    inconsistent(trace, "claim2", "chord-to-x_r case exhausted without the wrap arc");
                }
                // claim 3: count the low chords
                std::vector<int> w_low;
                for (int j = 2; j <= r - 1; ++j)
                    if (C.has_arc(end, P[j - 1])) w_low.push_back(j);
                int xr1 = P[r];
                uint64_t p1 = 0;
                for (int t = r - 1; t < len; ++t) p1 |= 1ull << P[t];
                bool tried = false;
                for (auto it = w_low.rbegin(); it != w_low.rend(); ++it) {
                    int j = *it;
                    for (int u : bits_ascending(C.out_mask(xr1) & ~p1 & ~(1ull << P[j - 1]) & ~(1ull << P[j - 2]))) {
                        tried = true;
                        std::vector<int> seq{P[j - 2], P[j - 1]};
                        for (int t = len - 1; t >= r; --t) seq.push_back(P[t]);
                        seq.push_back(u);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim3", "LOW_CHORDS", "low chords of the end host the cap");
                    }
                }
                (void)tried;
                inconsistent(trace, "claim3",
                             "no wrap arc and the low-chord constructions exhausted (out-degree count violated)");
            }

            // wrap arc present: the path closes into a cycle
            auto rotate_to_end = [&](int mpos) {
                std::vector<int> rot;
                rot.reserve(len);
                for (int t = 1; t <= len; ++t) rot.push_back(P[(mpos + t) % len]);
                return rot;
            };

            bool restarted = false;
            for (int mpos = 0; mpos < len && !restarted; ++mpos) {
                int e = P[mpos];
                uint64_t out_d2_off = C.out_mask(e) & d2 & ~pm;
                if (out_d2_off) {
                    int z = std::countr_zero(out_d2_off);
                    std::vector<int> np = rotate_to_end(mpos);
                    np.push_back(z);
                    extend_in_d2(np);
                    P = std::move(np);
                    restarted = true;
                    break;
                }
                uint64_t in_d2_off = C.in_mask(e) & d2 & ~pm;
                if (in_d2_off) {
                    int z = std::countr_zero(in_d2_off);
                    std::vector<int> np;
                    np.push_back(z);
                    for (int t = 0; t < len; ++t) np.push_back(P[(mpos + t) % len]);
                    extend_in_d2(np);
                    P = std::move(np);
                    restarted = true;
                    break;
                }
            }
            if (restarted) continue;

            for (int mpos = 0; mpos < len; ++mpos) {
                int e = P[mpos];
                uint64_t a_rot = C.out_mask(e) & d1;
                int cnt = std::popcount(a_rot);
                if (cnt == 0) continue;
                auto rot = rotate_to_end(mpos);
                if (cnt >= 2) {
                    std::vector<int> q(rot.end() - k, rot.end());
                    if (ctx.two_caps(q, a_rot))
                        return finish("rotation", "ROTATION_TWO_CAPS", "rotated end with two D1 out-neighbors");
                    inconsistent(trace, "rotation", "two-cap machinery exhausted on a rotation");
                }
                if (ctx.claim1_single(rot, std::countr_zero(a_rot)))
                    return finish("rotation", "ROTATION_SINGLE_CAP", "rotated end with one D1 out-neighbor");
                inconsistent(trace, "rotation", "single-cap machinery exhausted on a rotation");
            }

            for (int mpos = 0; mpos < len; ++mpos) {
                int e = P[mpos];
                uint64_t zs = C.in_mask(e) & ~pm;  // all in D1 after stabilization
                if (!zs) continue;
                auto rot = rotate_to_end(mpos);
                int r2 = len - k;
                int xr = rot[r2 - 1];
                uint64_t seg = 0;
                for (int t = r2; t < len; ++t) seg |= 1ull << rot[t];
                for (int u : bits_ascending(C.out_mask(xr) & ~seg & ~(1ull << xr))) {
                    for (int z : bits_ascending(zs)) {
                        if (z == u) continue;
                        std::vector<int> seq{z};
                        for (int t = len - 1; t >= r2 - 1; --t) seq.push_back(rot[t]);
                        seq.push_back(u);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim4", "OUTSIDE_IN_NEIGHBOR", "outside in-neighbor feeds the reversed segment");
                    }
                }
                if (C.has_arc(xr, rot[r2 + 1])) {
                    for (int j = r2 - 1; j >= 2; --j) {
                        if (!C.has_arc(e, rot[j - 1])) continue;
                        std::vector<int> seq{rot[j - 2], rot[j - 1]};
                        for (int t = len - 1; t >= r2 + 1; --t) seq.push_back(rot[t]);
                        seq.push_back(rot[r2 - 1]);
                        seq.push_back(rot[r2]);
                        if (ctx.emit(std::move(seq)))
                            return finish("claim4", "PINNED_SEGMENT", "pinned out-neighborhood of x_r closes the pattern");
                    }
                }
                inconsistent(trace, "claim4", "outside in-neighbor constructions exhausted");
            }

            // terminal: the path is closed, saturated, and spans the host
            if (pm != C.full_mask() || d1 != 0)
                inconsistent(trace, "terminal", "saturated cycle does not span a critical host");
            for (int v = 0; v < C.order(); ++v)
                if (C.out_degree(v) != k || C.in_degree(v) != k)
                    inconsistent(trace, "terminal", "spanning cycle host is not k-regular");
            if (!C.is_tournament() || C.order() != 2 * k + 1)
                inconsistent(trace, "terminal", "regular host is not a (2k+1)-tournament");
            auto w = find_pattern(C, three_block(1, k, 1));
            if (!w)
                inconsistent(trace, "terminal", "(2k+1)-tournament misses P(1,k,1)");
            ctx.em.out = w;
            return finish("terminal", "TOURNAMENT",
                          "external tournament containment, substituted by exhaustive matcher");
        }
    }

    int chi1 = chromatic_number(D1, cap).chi;
    if (chi1 < k + 2)
        inconsistent(trace, "dichotomy", "neither chi(D2) >= k nor chi(D1) >= k+2");

    // case B: directed path machinery inside D1
    auto sub_path = gallai_roy_path(D1);
    std::vector<int> Z(sub_path.size());
    for (size_t t = 0; t < sub_path.size(); ++t) Z[t] = d1_map[sub_path[t]];
    {
        uint64_t on = path_mask(Z);
        for (;;) {
            uint64_t front = C.in_mask(Z.front()) & d1 & ~on;
            if (front) {
                int z = std::countr_zero(front);
                Z.insert(Z.begin(), z);
                on |= 1ull << z;
                continue;
            }
            uint64_t back = C.out_mask(Z.back()) & d1 & ~on;
            if (back) {
                int z = std::countr_zero(back);
                Z.push_back(z);
                on |= 1ull << z;
                continue;
            }
            break;
        }
    }
    int len = static_cast<int>(Z.size());
    if (len < k + 2)
        inconsistent(trace, "caseB", "D1 path shorter than its chromatic guarantee");
    auto& bst = trace.add("caseB", "CASE_D1", "non-extendable directed path in D1");
    bst.sets["P"] = Z;

    uint64_t z_head = 0;  // [z_1, z_{k+1}]
    for (int t = 0; t <= k; ++t) z_head |= 1ull << Z[t];
    uint64_t z_low = 0;  // [z_1, z_k]
    for (int t = 0; t < k; ++t) z_low |= 1ull << Z[t];

    uint64_t a_set = C.in_mask(Z[0]) & d2;
    for (int a1 : bits_ascending(a_set)) {
        for (int v : bits_ascending(C.in_mask(Z[k - 1]) & ~z_head & ~(1ull << a1))) {
            uint64_t w_set = C.out_mask(a1) & ~z_low & ~(1ull << v);
            bool any_w = false;
            for (int w : bits_ascending(w_set)) {
                any_w = true;
                std::vector<int> seq{v};
                for (int t = k - 1; t >= 0; --t) seq.push_back(Z[t]);
                seq.push_back(a1);
                seq.push_back(w);
                if (ctx.emit(std::move(seq)))
                    return finish("caseB", "D2_IN_NEIGHBOR_ESCAPE", "a D2 in-neighbor of z_1 escapes the head");
            }
            if (any_w) continue;
            if (C.has_arc(a1, Z[1])) {
                for (int y : bits_ascending(C.in_mask(Z[k]) & ~z_low & ~(1ull << a1))) {
                    std::vector<int> seq{y};
                    for (int t = k; t >= 1; --t) seq.push_back(Z[t]);
                    seq.push_back(a1);
                    seq.push_back(Z[0]);
                    if (ctx.emit(std::move(seq)))
                        return finish("caseB", "D2_IN_NEIGHBOR_Z2", "chord to z_2 reroutes the head");
                }
            } else if (k >= 3 && C.has_arc(a1, Z[2])) {
                uint64_t excl = (1ull << a1) | (1ull << Z[0]);
                for (int t = 2; t <= k + 1; ++t) excl |= 1ull << Z[t];
                for (int x : bits_ascending(C.in_mask(Z[k + 1]) & ~excl)) {
                    std::vector<int> seq{x};
                    for (int t = k + 1; t >= 2; --t) seq.push_back(Z[t]);
                    seq.push_back(a1);
                    seq.push_back(Z[0]);
                    if (ctx.emit(std::move(seq)))
                        return finish("caseB", "D2_IN_NEIGHBOR_Z3", "chord to z_3 reroutes the head");
                }
            } else if (k == 2) {
                for (int x : bits_ascending(C.in_mask(Z[3]) & ~(1ull << Z[2]))) {
                    for (int f : bits_ascending(C.out_mask(Z[1]) & ~(1ull << x) & ~(1ull << Z[2]) & ~(1ull << Z[3]) &
                                                ~(1ull << Z[1]))) {
                        if (ctx.emit({x, Z[3], Z[2], Z[1], f}))
                            return finish("caseB", "D2_IN_NEIGHBOR_SHORT", "short-head reroute");
                    }
                }
            }
        }
    }
    if (a_set)
        inconsistent(trace, "caseB", "D2 in-neighbor machinery exhausted");

    std::vector<int> t_set;
    for (int t = k + 1; t <= len - 1; ++t)
        if (C.has_arc(Z[t - 1], Z[0])) t_set.push_back(t);
    if (t_set.size() < 2)
        inconsistent(trace, "caseB", "fewer than two feedback chords into z_1");
    uint64_t z_low_k1 = 0;  // [z_1, z_{k-1}]
    for (int t = 0; t < k - 1; ++t) z_low_k1 |= 1ull << Z[t];
    auto i_set = bits_ascending(C.in_mask(Z[k - 1]) & ~z_low_k1);
    if (i_set.size() < 2)
        inconsistent(trace, "caseB", "in-degree of z_k missing its two outside members");
    for (size_t i1 = 0; i1 < t_set.size(); ++i1)
        for (size_t i2 = i1 + 1; i2 < t_set.size(); ++i2)
            for (int y : i_set)
                for (int t : {t_set[i1], t_set[i2]}) {
                    if (y == Z[t - 1] || y == Z[t]) continue;
                    std::vector<int> seq{y};
                    for (int tt = k - 1; tt >= 0; --tt) seq.push_back(Z[tt]);
                    seq.push_back(Z[t - 1]);
                    seq.push_back(Z[t]);
                    if (ctx.emit(std::move(seq)))
                        return finish("caseB", "FEEDBACK_CHORDS", "two feedback chords and the outside in-neighbors of z_k");
                }
    inconsistent(trace, "caseB", "feedback chord intersection argument exhausted");
}

}  // namespace blockpath
