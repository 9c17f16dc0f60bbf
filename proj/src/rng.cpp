#include "blockpath/rng.hpp"

namespace blockpath {

Digraph random_digraph(int n, Mode mode, SplitMix64& rng) {
    uint64_t states = mode == Mode::oriented ? 3 : 4;
    std::vector<uint64_t> out(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (rng.next_below(states)) {
                case 1: out[u] |= 1ull << v; break;
                case 2: out[v] |= 1ull << u; break;
                case 3:
                    out[u] |= 1ull << v;
                    out[v] |= 1ull << u;
                    break;
                default: break;
            }
        }
    return Digraph::from_out_masks(n, out, mode);
}

Digraph random_tournament(int n, SplitMix64& rng) {
    std::vector<uint64_t> out(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_below(2) == 0)
                out[u] |= 1ull << v;
            else
                out[v] |= 1ull << u;
        }
    return Digraph::from_out_masks(n, out, Mode::oriented);
}

}  // namespace blockpath
