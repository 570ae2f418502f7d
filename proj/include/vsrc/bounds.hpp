#pragma once

#include <string>
#include <vector>

#include "vsrc/conflict.hpp"
#include "vsrc/exact.hpp"
#include "vsrc/graph.hpp"

namespace vsrc {

struct CliquePartition {
  std::vector<std::vector<int>> parts;  // disjoint cover of V, each a clique
};

struct EdgeCliqueCover {
  std::vector<std::vector<int>> cliques;  // every edge inside some clique
};

// Intersection representation: vertex v carries the element set sets[v];
// uv is an edge exactly when the sets intersect.
struct IntersectionRep {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> sets;  // element indices, ascending
};

// Edge uv is colored by the unordered pair {part(u), part(v)}; shortest paths
// never repeat a pair of parts, so this always verifies. Uses at most
// r(r+1)/2 colors for r parts.
Coloring coloring_from_clique_partition(const Graph& g, const CliquePartition& p);

// Edge uv is colored by the smallest universe element shared by its endpoint
// sets; four vertices sharing an element form a clique, so shortest paths
// never repeat an element. Uses at most |universe| colors.
Coloring coloring_from_intersection_rep(const Graph& g, const IntersectionRep& rep);

// Covers induce an intersection representation with one element per clique.
Coloring coloring_from_ecc(const Graph& g, const EdgeCliqueCover& cover);

struct ChordalColoring {
  bool chordal = false;
  Coloring coloring;
  int clique_count = 0;          // maximal cliques = universe size
  int omega = 0;                 // clique number (exact for chordal inputs)
  std::vector<int> witness_cycle;  // chordless cycle of length >= 4 otherwise
};

// Perfect elimination order by lexicographic BFS; the maximal cliques form a
// tree with at most n - omega + 1 nodes, which serves as the universe of an
// intersection representation.
ChordalColoring chordal_coloring(const Graph& g);

// Circular arc, sweeping from start to end in increasing angle (degrees,
// wrapping at 360). Endpoints are closed.
struct Arc {
  double start = 0;
  double end = 0;
};

// Universe = the set of arc end points; each vertex keeps the end points its
// arc contains. Throws InvalidInputError (ArcMismatch) when g is not the
// intersection graph of the arcs.
Coloring circular_arc_coloring(const std::vector<Arc>& arcs, const Graph& g);

// Adds a universal vertex n adjacent to everything.
Graph hat_graph(const EdgeList& g);
Graph hat_graph(const Graph& g);

// 3-coloring of the hat graph from a clique partition with at most 3 parts:
// edges inside part i get color i, edges between parts i and j get the third
// color, and the spoke to v gets v's part color.
Coloring hat_cp3_coloring(const EdgeList& g, const CliquePartition& p);

struct GroupableCheck {
  bool groupable = false;
  // For every vertex, a partition of its neighborhood into cliques (minimum
  // size); certificate for both outcomes.
  std::vector<std::vector<std::vector<int>>> neighborhood_parts;
  int failing_vertex = -1;  // neighborhood needs more than k cliques
};

// True iff every vertex's neighborhood can be partitioned into <= k cliques.
// Failure at k certifies vsrc > k.
GroupableCheck k_perfectly_groupable(const Graph& g, int k, const SearchBudget& budget = {});

// Minimum clique partition = chromatic number of the complement.
CliquePartition clique_partition_exact(const Graph& g, const SearchBudget& budget = {});

// Grows a maximal clique around each uncovered edge in turn.
EdgeCliqueCover greedy_edge_clique_cover(const Graph& g);

// Cover by triangles and single edges of size at most floor(n^2/4): pick an
// edge, cover everything incident to its endpoints, remove both, repeat.
EdgeCliqueCover quarter_edge_clique_cover(const Graph& g);

struct BoundsReport {
  struct Lower {
    int value = 0;
    int diameter = 0;
    int bridges = 0;
    int groupable = 0;         // max over v of cp(neighborhood of v)
    int groupable_vertex = -1;
    int conflict_clique = 0;   // clique found in the conflict graph
    std::vector<int> conflict_clique_edges;
  };
  struct UpperCandidate {
    std::string method;
    int k = 0;
    Coloring coloring;  // verified
  };

  Lower lower;
  std::vector<UpperCandidate> upper_candidates;
  int upper = 0;
  std::string upper_method;
};

// Aggregates every certified bound this module can produce. Individual
// engines that run out of budget are skipped; the report degrades gracefully.
BoundsReport vsrc_bounds(const Graph& g, const SearchBudget& budget = {});

}  // namespace vsrc
