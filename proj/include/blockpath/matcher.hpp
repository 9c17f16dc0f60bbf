#pragma once

#include <optional>

#include "blockpath/pattern.hpp"

namespace blockpath {

// Exhaustive backtracking over vertex sequences. Returns a witness iff one
// exists; deterministic first witness (seeded at the middle position, the
// end with the smaller candidate set extended first, candidates ascending).
std::optional<PathWitness> find_pattern(const Digraph& d, const BlockPattern& p);

// Same search with position 0 pinned to `origin`.
std::optional<PathWitness> find_pattern_from(const Digraph& d, const BlockPattern& p, int origin);

// Opt-in exhaustive listing; host order capped.
std::vector<PathWitness> find_all_patterns(const Digraph& d, const BlockPattern& p, int cap = 8);

// Certificate check, independent of the matcher's search: distinctness plus
// every required arc. False on malformed input, never throws.
bool verify_witness(const Digraph& d, const PathWitness& w);

// All block patterns with the given arc count: compositions in lexicographic
// order, forward before backward.
std::vector<BlockPattern> all_patterns_of_length(int len);

struct TournamentPathsReport {
    std::vector<BlockPattern> found;
    std::vector<BlockPattern> missing;
};

// Per-pattern found/missing flags over all patterns of order |t|.
TournamentPathsReport contains_all_paths_report(const Digraph& t, int cap = 7);

}  // namespace blockpath
