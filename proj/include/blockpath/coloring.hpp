#pragma once

#include <optional>
#include <vector>

#include "blockpath/digraph.hpp"

namespace blockpath {

// Exact chromatic number of the underlying graph, with a witnessing proper
// coloring. The lower bound evidence is a clique of size chi when one exists;
// otherwise the (chi-1)-infeasibility was established by exhaustive search.
struct ChromaticCertificate {
    int chi = 0;
    std::vector<int> coloring;             // colors 0..chi-1
    std::vector<int> clique;               // a maximum clique of the underlying graph
    bool clique_is_evidence = false;       // |clique| == chi
    bool exhaustive_marker = false;        // chi-1 shown infeasible by search
};

ChromaticCertificate chromatic_number(const Digraph& d, int cap = 16);

// Plain positional backtracking, independent of the branch-and-bound route.
std::optional<std::vector<int>> is_k_colorable(const Digraph& d, int k, int cap = 16);

bool is_proper_coloring(const Digraph& d, const std::vector<int>& coloring);

// Exact clique number of the underlying graph.
int clique_number(const Digraph& d, int cap = 16);
std::vector<int> max_clique(const Digraph& d, int cap = 16);
// Some clique of the given size, if one exists.
std::optional<std::vector<int>> find_clique_of_size(const Digraph& d, int size, int cap = 16);

struct CriticalResult {
    Digraph sub;
    std::vector<int> vertex_map;  // vertex_map[new_id] = old_id
};

// Greedy vertex deletion preserving chi >= t; the result is t-critical.
CriticalResult critical_subdigraph(const Digraph& d, int t, int cap = 16);

// A non-extendable directed path with at least chi(d) vertices: level
// function on a maximal spanning acyclic subdigraph, then greedy extension
// at both ends.
std::vector<int> gallai_roy_path(const Digraph& d);

// Property check for the 2n-coloring bound: applicable when the relevant
// degree is at most n and the underlying graph has no K_{2n+1}. The checker
// reports the in-degree form and the out-degree-mirrored form side by side.
struct Lemma21Report {
    int n = 0;
    int max_in_degree = 0;
    int max_out_degree = 0;
    int clique_number = 0;
    int chi = 0;
    bool applicable_in = false;
    bool applicable_out = false;
    bool holds_in = false;   // meaningful only when applicable_in
    bool holds_out = false;  // meaningful only when applicable_out
};

Lemma21Report check_lemma21(const Digraph& d, int n, int cap = 16);

}  // namespace blockpath
