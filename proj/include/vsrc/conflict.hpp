#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vsrc/graph.hpp"

namespace vsrc {

// Edge coloring, indexed by edge id. k is the number of distinct colors and
// color values lie in [0, k).
struct Coloring {
  int k = 0;
  std::vector<int> color;
};

// Reindexes color classes so that the class containing the smallest edge id
// comes first, then the next unseen class, and so on.
Coloring canonicalize_coloring(const Coloring& c);

// Two edges conflict when some shortest path of the graph contains both; such
// edges must receive different colors in any very strong rainbow coloring.
//
// Detection is a constant-time distance test: with orientations e1 = (u,v),
// e2 = (x,y), the edges conflict iff d(u,y) = d(v,x) + 2 for some choice of
// orientations. A walk u,v,...,x,y of that length is necessarily a shortest
// path containing both edges, and conversely a shortest path through both
// edges restricts to such a subpath between the outer endpoints.
bool edges_conflict(const Graph& g, const DistanceMatrix& d, int e1, int e2);

// Graph on the edge ids of the base graph; adjacency = conflicting pairs.
// Its chromatic number equals the very strong rainbow connection number of
// the base graph.
struct ConflictGraph {
  const Graph* base = nullptr;
  std::vector<std::vector<int>> adj;  // conflict lists, ascending
  std::vector<char> matrix;           // m*m adjacency

  int size() const { return static_cast<int>(adj.size()); }
  bool conflicting(int e1, int e2) const {
    return matrix[static_cast<size_t>(e1) * adj.size() + e2] != 0;
  }
};

ConflictGraph build_conflict_graph(const Graph& g);
ConflictGraph build_conflict_graph(const Graph& g, const DistanceMatrix& d);

struct Violation {
  std::vector<int> path;  // shortest path as a vertex sequence
  int edge1 = -1;         // two equally colored edge ids on that path
  int edge2 = -1;
};

struct VerificationReport {
  bool valid = false;
  std::optional<Violation> violation;
};

// Checks that every shortest path between every vertex pair sees pairwise
// distinct edge colors. On failure reconstructs a witness shortest path
// through two equally colored edges. Throws ParseError(incomplete_coloring)
// when the coloring does not cover every edge.
VerificationReport verify_coloring(const Graph& g, const Coloring& c);

// All simple paths of length d(s,t) from s to t, in lexicographic vertex
// order. Reference oracle for property tests; only intended for small graphs.
// Throws BudgetError once more than `cap` paths exist.
std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, int s, int t,
                                                       std::uint64_t cap = 1'000'000);

}  // namespace vsrc
