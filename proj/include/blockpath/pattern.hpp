#pragma once

#include <string>
#include <vector>

#include "blockpath/digraph.hpp"

namespace blockpath {

enum class Direction { forward, backward };

inline Direction opposite(Direction d) {
    return d == Direction::forward ? Direction::backward : Direction::forward;
}

// An oriented path type: maximal block lengths plus the first block's
// direction. P(k,l,r) is blocks {k,l,r} first forward; the barred form is
// the same blocks first backward.
struct BlockPattern {
    std::vector<int> blocks;
    Direction first = Direction::forward;

    int length() const;               // number of arcs
    int order() const;                // number of vertices
    Direction arc_direction(int arc_index) const;
    bool is_antidirected() const;

    bool operator==(const BlockPattern& o) const = default;
};

// Validating constructor: blocks nonempty, every length >= 1.
BlockPattern pattern(std::vector<int> blocks, Direction first);

// Reverse every arc: P <-> barred P.
BlockPattern flip(const BlockPattern& p);
// Traverse from the other end: P(k,l,r) -> barred P(r,l,k).
BlockPattern mirror(const BlockPattern& p);

BlockPattern three_block(int k, int l, int r);
BlockPattern two_block(int k, int l);
BlockPattern directed_path_pattern(int len);

std::string to_string(const BlockPattern& p);  // "k,l,r/fwd"
BlockPattern pattern_from_string(const std::string& blocks_csv, const std::string& first);

struct PathWitness {
    std::vector<int> vertices;
    BlockPattern pattern;

    bool operator==(const PathWitness& o) const = default;
};

}  // namespace blockpath
