#include "blockpath/digraph.hpp"

#include <bit>

namespace blockpath {

std::string to_string(Mode m) {
    return m == Mode::oriented ? "oriented" : "general";
}

Mode mode_from_string(const std::string& s) {
    if (s == "oriented") return Mode::oriented;
    if (s == "general") return Mode::general;
    throw GraphError(GraphError::Kind::not_applicable, "unknown mode: " + s);
}

Digraph::Digraph(int order, const std::vector<Arc>& arcs, Mode mode) {
    if (order < 0 || order > kMaxOrder)
        throw GraphError(GraphError::Kind::cap_exceeded,
                         "order " + std::to_string(order) + " outside [0," + std::to_string(kMaxOrder) + "]");
    n_ = order;
    mode_ = mode;
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw GraphError(GraphError::Kind::loop, "loop at vertex " + std::to_string(u));
        if ((out_[u] >> v) & 1u)
            throw GraphError(GraphError::Kind::duplicate_arc,
                             "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (mode_ == Mode::oriented && ((out_[v] >> u) & 1u))
            throw GraphError(GraphError::Kind::digon,
                             "digon {" + std::to_string(u) + "," + std::to_string(v) + "} in oriented mode");
        out_[u] |= 1ull << v;
        in_[v] |= 1ull << u;
        ++arc_count_;
    }
}

Digraph Digraph::from_out_masks(int order, const std::vector<uint64_t>& out, Mode mode) {
    Digraph d;
    if (order < 0 || order > kMaxOrder)
        throw GraphError(GraphError::Kind::cap_exceeded, "order out of range");
    d.n_ = order;
    d.mode_ = mode;
    d.out_ = out;
    d.in_.assign(order, 0);
    for (int u = 0; u < order; ++u) {
        d.arc_count_ += std::popcount(out[u]);
        uint64_t m = out[u];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            d.in_[v] |= 1ull << u;
        }
    }
    return d;
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return std::popcount(out_[v]);
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    return std::popcount(in_[v]);
}

int Digraph::underlying_degree(int v) const {
    check_vertex(v);
    return std::popcount(out_[v] | in_[v]);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int u = 0; u < n_; ++u) {
        uint64_t m = out_[u];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            result.emplace_back(u, v);
        }
    }
    return result;
}

bool Digraph::operator==(const Digraph& o) const {
    return n_ == o.n_ && mode_ == o.mode_ && out_ == o.out_;
}

bool Digraph::is_tournament() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            bool uv = (out_[u] >> v) & 1u;
            bool vu = (out_[v] >> u) & 1u;
            if (uv == vu) return false;  // both or neither
        }
    return true;
}

bool Digraph::has_digon() const {
    for (int u = 0; u < n_; ++u)
        if (out_[u] & in_[u]) return true;
    return false;
}

Digraph Digraph::reversed() const {
    Digraph d;
    d.n_ = n_;
    d.mode_ = mode_;
    d.arc_count_ = arc_count_;
    d.out_ = in_;
    d.in_ = out_;
    return d;
}

Digraph Digraph::induced(uint64_t subset, std::vector<int>* map_out) const {
    if (subset & ~full_mask())
        throw GraphError(GraphError::Kind::vertex_out_of_range, "induced subset not within vertex range");
    std::vector<int> old_ids = mask_to_vertices(subset);
    std::vector<int> new_of(n_, -1);
    for (size_t i = 0; i < old_ids.size(); ++i) new_of[old_ids[i]] = static_cast<int>(i);

    Digraph d;
    d.n_ = static_cast<int>(old_ids.size());
    d.mode_ = mode_;
    d.out_.assign(d.n_, 0);
    d.in_.assign(d.n_, 0);
    for (int i = 0; i < d.n_; ++i) {
        uint64_t row = out_[old_ids[i]] & subset;
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            d.out_[i] |= 1ull << new_of[v];
            d.in_[new_of[v]] |= 1ull << i;
            ++d.arc_count_;
        }
    }
    if (map_out) *map_out = std::move(old_ids);
    return d;
}

Digraph build(int order, const std::vector<Arc>& arcs, Mode mode) {
    return Digraph(order, arcs, mode);
}

DegreeInfo degrees(const Digraph& d, int v) {
    DegreeInfo info;
    info.out_degree = d.out_degree(v);
    info.in_degree = d.in_degree(v);
    info.out_neighbors = mask_to_vertices(d.out_mask(v));
    info.in_neighbors = mask_to_vertices(d.in_mask(v));
    return info;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
    std::vector<int> vs;
    while (mask) {
        vs.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return vs;
}

uint64_t vertices_to_mask(const std::vector<int>& vs, int order) {
    uint64_t m = 0;
    for (int v : vs) {
        if (v < 0 || v >= order)
            throw GraphError(GraphError::Kind::vertex_out_of_range, "vertex out of range in set");
        m |= 1ull << v;
    }
    return m;
}

}  // namespace blockpath
