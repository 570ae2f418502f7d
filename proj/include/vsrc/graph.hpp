#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsrc/errors.hpp"

namespace vsrc {

using Edge = std::pair<int, int>;  // endpoints, normalized to first < second

// Raw edge list, prior to validation. Used where connectivity is not assumed
// (generator output, complements, graphs about to get a universal vertex).
struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

struct Neighbor {
  int vertex;
  int edge;  // edge id
};

// Simple connected undirected graph with dense vertex labels 0..n-1.
//
// Edge ids follow construction order, which makes every downstream color
// assignment reproducible. All containers are fixed after construction, so
// instances can be shared across threads freely.
class Graph {
 public:
  // Validates: labels in range, no self-loops, no duplicate edges, connected.
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  static Graph from_edge_list(const EdgeList& el) { return from_edges(el.n, el.edges); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(int id) const { return edges_[id]; }
  // Neighbor entries appear in edge-insertion order.
  const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int edge_id(int u, int v) const;  // -1 when absent
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
  std::string edge_name(int id) const;  // "u-v"
  EdgeList as_edge_list() const { return {n_, edges_}; }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::unordered_map<long long, int> edge_ids_;
};

// Edge-list text format: optional header line "p <n> <m>", then one edge per
// line "<u> <v>" with 0-based labels; lines starting with '#' are ignored.
Graph parse_graph(std::string_view text);
std::string format_edge_list(const Graph& g);

// All-pairs hop distances via one BFS per source, O(n*m) total.
class DistanceMatrix {
 public:
  static DistanceMatrix bfs_all_pairs(const Graph& g);
  int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  int diameter() const;
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// One shortest path from s to t as a vertex sequence (BFS parent chain,
// deterministic for a fixed graph).
std::vector<int> shortest_path(const Graph& g, int s, int t);

struct BiconnectedComponent {
  std::vector<int> edge_ids;  // ascending
};

// Biconnected components; single-edge components are the bridges.
std::vector<BiconnectedComponent> biconnected_components(const Graph& g);
std::vector<int> bridge_edges(const Graph& g);

enum class BlockKind { bridge, cycle };

struct Block {
  BlockKind kind;
  std::vector<int> edge_ids;
  // For cycle blocks: vertices in traversal order, starting at the smallest
  // vertex and moving toward its smaller neighbor within the block.
  std::vector<int> cycle_order;
};

struct CactusDecomposition {
  std::vector<Block> blocks;
  std::vector<int> edge_to_block;  // by edge id
};

struct CactusCheck {
  std::optional<CactusDecomposition> decomposition;
  // When not a cactus: the edges of a block that has more edges than vertices.
  std::vector<int> witness_block;
  bool ok() const { return decomposition.has_value(); }
};

// Succeeds iff every block is a single edge or a single cycle.
CactusCheck cactus_decomposition(const Graph& g);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> side;      // 0/1 per vertex when bipartite
  std::vector<int> odd_walk;  // closed odd walk witness otherwise
};

BipartiteCheck is_bipartite(const Graph& g);
// Same check over a bare adjacency structure (handles disconnected inputs).
BipartiteCheck is_bipartite_adjacency(const std::vector<std::vector<int>>& adj);

}  // namespace vsrc
