#pragma once

#include <string>
#include <vector>

#include "blockpath/digraph.hpp"

namespace blockpath {

// Named digraphs:
//   c3                       directed 3-cycle
//   regular5                 rotational tournament on Z_5, offsets {1,2}
//   paley7                   Paley tournament on Z_7, offsets {1,2,4}
//   tt(n)                    transitive tournament, arcs i -> j for i < j
//   directed_cycle(n)        directed n-cycle
//   rotational(n,o1,o2,...)  arcs v -> v+o (mod n) for each offset o
Digraph fixture(const std::string& name);

Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);
Digraph rotational_tournament(int n, const std::vector<int>& offsets);

}  // namespace blockpath
