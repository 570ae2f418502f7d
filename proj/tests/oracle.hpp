#pragma once

// Test-only reference implementations, kept deliberately naive and separate
// from the engines they check.

#include <vector>

#include "vsrc/graph.hpp"

namespace vsrc::testing {

// Chromatic number by plain backtracking in vertex order: try k = 1, 2, ...
// until a proper coloring exists. No saturation ordering, no clique bounds.
int brute_chromatic(const std::vector<std::vector<int>>& adj);

// Very strong rainbow connection number derived entirely from shortest-path
// enumeration: conflicts come from enumerated paths, the chromatic number
// from brute force.
int brute_vsrc(const Graph& g);

// True when the edge coloring is proper on the enumeration-based conflict
// relation; independent of the library verifier.
bool brute_coloring_valid(const Graph& g, const std::vector<int>& edge_colors);

// Edges whose removal disconnects the graph, found by deleting each edge in
// turn and re-checking reachability.
std::vector<int> bridges_by_deletion(const Graph& g);

}  // namespace vsrc::testing
