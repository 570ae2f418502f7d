#pragma once

#include <vector>

#include "vsrc/conflict.hpp"
#include "vsrc/graph.hpp"

namespace vsrc {

// Edge classes of a cactus:
//   bridge - not on any cycle
//   even   - on an even cycle
//   opp    - on an odd cycle, with the opposite vertex of degree > 2
//   rem    - on an odd cycle, with the opposite vertex of degree exactly 2
enum class EdgeClass { bridge, even, opp, rem };

struct EdgeClassification {
  std::vector<EdgeClass> cls;      // by edge id
  std::vector<int> cycle_of;       // block id for cycle edges, -1 for bridges
  std::vector<int> opposite_vertex;  // odd-cycle edges only, else -1
  std::vector<int> opposite_edge;    // even-cycle edges only, else -1
};

EdgeClassification classify_edges(const Graph& g, const CactusDecomposition& cd);

// Vertices reachable from the opposite vertex of `edge_id` without using any
// edge of its cycle; sorted ascending. The edge must lie on an odd cycle.
std::vector<int> opposite_subgraph(const Graph& g, const CactusDecomposition& cd, int edge_id);

// Auxiliary graph on the rem edges of one odd cycle: two edges are adjacent
// here when they do NOT conflict in g. Its maximum degree is at most 2.
struct HcGraph {
  std::vector<int> edge_ids;           // ascending
  std::vector<std::vector<int>> adj;   // by local index
};

HcGraph build_hc(const Graph& g, const DistanceMatrix& d, const EdgeClassification& cls,
                 const CactusDecomposition& cd, int block_id);

// Maximum matching of a graph with max degree <= 2; components are paths and
// cycles, matched greedily along each walk. Pairs are returned as edge ids,
// smaller first, sorted.
std::vector<std::pair<int, int>> max_matching_deg2(const HcGraph& h);

// For an opp edge, the first bridge/even/rem edge discovered by BFS inside
// its opposite subgraph; that edge never conflicts with the opp edge, so its
// color can be reused.
int find_reuse_edge(const Graph& g, const CactusDecomposition& cd,
                    const EdgeClassification& cls, int opp_edge);

struct CactusColoring {
  int k = 0;
  Coloring coloring;
};

// Optimal very strong rainbow coloring of a cactus, in polynomial time:
// unique colors on bridges, one color per opposite pair on each even cycle,
// matching-based colors on the rem edges of each odd cycle, and color reuse
// from the opposite subgraph for each opp edge.
// Throws InvalidInputError when g is not a cactus.
CactusColoring color_cactus(const Graph& g);

}  // namespace vsrc
