#include "blockpath/matcher.hpp"

#include <bit>
#include <functional>

namespace blockpath {

namespace {

struct MatchSearch {
    const Digraph& d;
    std::vector<Direction> dirs;  // dirs[j]: arc between positions j and j+1
    int len;
    std::vector<int> slot;  // slot[pos] = vertex, -1 unassigned
    uint64_t used = 0;
    bool all_mode = false;
    std::vector<PathWitness>* sink = nullptr;
    const BlockPattern* pat = nullptr;

    MatchSearch(const Digraph& dg, const BlockPattern& p) : d(dg), pat(&p) {
        len = p.length();
        dirs.resize(len);
        for (int j = 0; j < len; ++j) dirs[j] = p.arc_direction(j);
        slot.assign(len + 1, -1);
    }

    uint64_t front_candidates(int lo) const {
        // position lo-1, constrained by the arc toward position lo
        int v = slot[lo];
        uint64_t c = dirs[lo - 1] == Direction::forward ? d.in_mask(v) : d.out_mask(v);
        return c & ~used;
    }

    uint64_t back_candidates(int hi) const {
        int v = slot[hi];
        uint64_t c = dirs[hi] == Direction::forward ? d.out_mask(v) : d.in_mask(v);
        return c & ~used;
    }

    bool emit() {
        PathWitness w{slot, *pat};
        if (all_mode) {
            sink->push_back(std::move(w));
            return false;  // keep searching
        }
        result = std::move(w);
        return true;
    }

    std::optional<PathWitness> result;

    bool search(int lo, int hi) {
        if (lo == 0 && hi == len) return emit();
        bool can_front = lo > 0;
        bool can_back = hi < len;
        uint64_t fc = can_front ? front_candidates(lo) : 0;
        uint64_t bc = can_back ? back_candidates(hi) : 0;
        bool go_front;
        if (can_front && can_back)
            go_front = std::popcount(fc) <= std::popcount(bc);
        else
            go_front = can_front;
        uint64_t cands = go_front ? fc : bc;
        int pos = go_front ? lo - 1 : hi + 1;
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            slot[pos] = v;
            used |= 1ull << v;
            bool done = go_front ? search(lo - 1, hi) : search(lo, hi + 1);
            used &= ~(1ull << v);
            slot[pos] = -1;
            if (done) return true;
        }
        return false;
    }

    // left-to-right from a pinned origin
    bool search_anchored(int pos) {
        if (pos == len + 1) return emit();
        uint64_t cands = back_candidates(pos - 1);
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            slot[pos] = v;
            used |= 1ull << v;
            bool done = search_anchored(pos + 1);
            used &= ~(1ull << v);
            slot[pos] = -1;
            if (done) return true;
        }
        return false;
    }
};

void check_fits(const Digraph& d, const BlockPattern& p) {
    if (p.order() > d.order())
        throw PreconditionError("pattern order " + std::to_string(p.order()) + " exceeds host order " +
                                std::to_string(d.order()));
}

}  // namespace

std::optional<PathWitness> find_pattern(const Digraph& d, const BlockPattern& p) {
    check_fits(d, p);
    MatchSearch ms(d, p);
    int seed_pos = ms.len / 2;
    for (int v = 0; v < d.order(); ++v) {
        ms.slot[seed_pos] = v;
        ms.used = 1ull << v;
        if (ms.search(seed_pos, seed_pos)) return ms.result;
    }
    return std::nullopt;
}

std::optional<PathWitness> find_pattern_from(const Digraph& d, const BlockPattern& p, int origin) {
    check_fits(d, p);
    if (origin < 0 || origin >= d.order())
        throw GraphError(GraphError::Kind::vertex_out_of_range, "origin out of range");
    MatchSearch ms(d, p);
    ms.slot[0] = origin;
    ms.used = 1ull << origin;
    if (ms.search_anchored(1)) return ms.result;
    return std::nullopt;
}

std::vector<PathWitness> find_all_patterns(const Digraph& d, const BlockPattern& p, int cap) {
    check_fits(d, p);
    if (d.order() > cap)
        throw GraphError(GraphError::Kind::cap_exceeded, "exhaustive listing capped at order " + std::to_string(cap));
    std::vector<PathWitness> all;
    MatchSearch ms(d, p);
    ms.all_mode = true;
    ms.sink = &all;
    for (int v = 0; v < d.order(); ++v) {
        ms.slot[0] = v;
        ms.used = 1ull << v;
        ms.search_anchored(1);
        ms.used = 0;
        ms.slot[0] = -1;
    }
    return all;
}

bool verify_witness(const Digraph& d, const PathWitness& w) {
    if (w.pattern.blocks.empty()) return false;
    for (int b : w.pattern.blocks)
        if (b < 1) return false;
    if (static_cast<int>(w.vertices.size()) != w.pattern.order()) return false;
    uint64_t seen = 0;
    for (int v : w.vertices) {
        if (v < 0 || v >= d.order()) return false;
        if ((seen >> v) & 1) return false;
        seen |= 1ull << v;
    }
    for (int j = 0; j < w.pattern.length(); ++j) {
        int a = w.vertices[j], b = w.vertices[j + 1];
        bool ok = w.pattern.arc_direction(j) == Direction::forward ? d.has_arc(a, b) : d.has_arc(b, a);
        if (!ok) return false;
    }
    return true;
}

std::vector<BlockPattern> all_patterns_of_length(int len) {
    std::vector<BlockPattern> out;
    std::vector<int> comp;
    std::function<void()> rec = [&]() {
        int sum = 0;
        for (int c : comp) sum += c;
        if (sum == len) {
            out.push_back(pattern(comp, Direction::forward));
            out.push_back(pattern(comp, Direction::backward));
            return;
        }
        for (int next = 1; next <= len - sum; ++next) {
            comp.push_back(next);
            rec();
            comp.pop_back();
        }
    };
    if (len >= 1) rec();
    return out;
}

TournamentPathsReport contains_all_paths_report(const Digraph& t, int cap) {
    if (!t.is_tournament())
        throw GraphError(GraphError::Kind::not_applicable, "host is not a tournament");
    if (t.order() > cap)
        throw GraphError(GraphError::Kind::cap_exceeded, "tournament paths report capped at order " + std::to_string(cap));
    TournamentPathsReport rep;
    for (const auto& p : all_patterns_of_length(t.order() - 1)) {
        if (find_pattern(t, p))
            rep.found.push_back(p);
        else
            rep.missing.push_back(p);
    }
    return rep;
}

}  // namespace blockpath
