#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockpath {

// A digraph is either digon-free (oriented) or may carry opposite arc pairs.
enum class Mode { oriented, general };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

using Arc = std::pair<int, int>;

struct GraphError : std::runtime_error {
    enum class Kind {
        loop,
        duplicate_arc,
        digon,
        vertex_out_of_range,
        cap_exceeded,
        not_applicable,
        unknown_fixture,
    };
    Kind kind;
    GraphError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adjacency rows are single 64-bit masks, so vertex ids stay below 62
// (the digraph6 single-character size limit).
inline constexpr int kMaxOrder = 62;

class Digraph {
public:
    Digraph() = default;
    Digraph(int order, const std::vector<Arc>& arcs, Mode mode);

    static Digraph from_out_masks(int order, const std::vector<uint64_t>& out, Mode mode);

    int order() const { return n_; }
    Mode mode() const { return mode_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (out_[u] >> v) & 1u;
    }
    uint64_t out_mask(int v) const {
        check_vertex(v);
        return out_[v];
    }
    uint64_t in_mask(int v) const {
        check_vertex(v);
        return in_[v];
    }
    // underlying-graph neighborhood
    uint64_t adj_mask(int v) const {
        check_vertex(v);
        return out_[v] | in_[v];
    }
    int out_degree(int v) const;
    int in_degree(int v) const;
    int underlying_degree(int v) const;

    uint64_t full_mask() const { return n_ == 0 ? 0 : ((1ull << n_) - 1); }

    // arcs in ascending (u, v) order
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph& o) const;

    bool is_tournament() const;
    bool has_digon() const;

    Digraph reversed() const;

    // Induced subdigraph on the vertices of `subset`, relabeled to
    // 0..|subset|-1 in ascending old-id order. map_out[new_id] = old_id.
    Digraph induced(uint64_t subset, std::vector<int>* map_out = nullptr) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }

    int n_ = 0;
    Mode mode_ = Mode::oriented;
    int arc_count_ = 0;
    std::vector<uint64_t> out_, in_;
};

Digraph build(int order, const std::vector<Arc>& arcs, Mode mode);

struct DegreeInfo {
    int out_degree = 0;
    int in_degree = 0;
    std::vector<int> out_neighbors;
    std::vector<int> in_neighbors;
};

DegreeInfo degrees(const Digraph& d, int v);

std::vector<int> mask_to_vertices(uint64_t mask);
uint64_t vertices_to_mask(const std::vector<int>& vs, int order);

}  // namespace blockpath
