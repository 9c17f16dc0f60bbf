#pragma once

#include "blockpath/coloring.hpp"
#include "blockpath/matcher.hpp"
#include "blockpath/trace.hpp"

namespace blockpath {

struct FinderResult {
    PathWitness witness;
    ProofTrace trace;
};

// Chromatic threshold g(m,i) guarantees the three-block path
// P(k, m-1-k-i, i). Splits the host on out-degree >= m-2, recurses into the
// high-out-degree part, and falls back to a clique-hosted exhaustive match
// in the rest. Requires a digon-free host for i >= 1.
FinderResult find_three_block_decomposition(const Digraph& d, int k, int i, int m, int chromatic_cap = 16);

// Same statement for the reversed pattern, by reduction through reverse(d).
FinderResult find_reversed_three_block(const Digraph& d, int k, int i, int m, int chromatic_cap = 16);

// chi >= k+4 guarantees some P(1,l,1) with l >= k: criticalize, grow a
// maximal P(s,1), then one of three exits fires at the front vertex.
FinderResult find_p1l1_at_least(const Digraph& d, int k, int chromatic_cap = 16);

// chi >= 3k+4 guarantees P(1,k,1) via the set of origins of P(k,1) paths.
FinderResult find_p1k1_via_origins(const Digraph& d, int k, int chromatic_cap = 16);

// chi >= 2k+1 guarantees P(1,k,1) (k >= 2): criticalize, partition on
// in-degree k+1, walk the case tree of the in-degree partition proof.
// Requires a digon-free host.
FinderResult find_p1k1(const Digraph& d, int k, int chromatic_cap = 16);

}  // namespace blockpath
