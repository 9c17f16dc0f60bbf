#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blockpath/digraph.hpp"

namespace blockpath {

// Byte string equal for two digraphs iff they are isomorphic. Brute-force
// minimization over degree-refined vertex orderings; desk-scale only.
std::string canonical_form(const Digraph& d, int cap = 10);

bool isomorphic(const Digraph& a, const Digraph& b, int cap = 10);

// Exactly one representative per isomorphism class, ordered by canonical form.
std::vector<Digraph> enumerate_tournaments(int n, int cap = 8);
void for_each_tournament(int n, const std::function<void(const Digraph&)>& cb, int cap = 8);
uint64_t count_tournaments(int n, int cap = 8);

inline int pair_count(int n) { return n * (n - 1) / 2; }
inline uint64_t pair_states(Mode mode) { return mode == Mode::oriented ? 3 : 4; }
uint64_t labeled_digraph_count(int n, Mode mode);

// Streams every labeled digraph of the given order; each unordered pair takes
// one of 3 states (oriented) or 4 (general), iterated as a mixed-radix
// counter over pairs in lexicographic order. `shard_digit` restricts the
// first pair's state, splitting the stream into pair_states(mode) shards.
// Returns the number of instances visited; the callback may return false to
// stop early.
uint64_t for_each_labeled_digraph(int n, Mode mode, const std::function<bool(const Digraph&)>& cb,
                                  int cap = 6, int shard_digit = -1);

std::vector<Digraph> enumerate_digraphs_deduped(int n, Mode mode, int cap = 5);

}  // namespace blockpath
