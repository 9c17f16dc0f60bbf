#pragma once

#include <cstdint>

#include "blockpath/digraph.hpp"

namespace blockpath {

// SplitMix64. The exact algorithm is part of the report contract: campaigns
// with the same seed must generate the same instances everywhere.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t next_below(uint64_t bound) { return next() % bound; }
};

// One draw per unordered pair in lexicographic order (0,1),(0,2),...,(n-2,n-1).
// oriented: r in {0 none, 1 u->v, 2 v->u}; general additionally {3 both}.
Digraph random_digraph(int n, Mode mode, SplitMix64& rng);

// One draw per pair: 0 gives u->v, 1 gives v->u.
Digraph random_tournament(int n, SplitMix64& rng);

}  // namespace blockpath
