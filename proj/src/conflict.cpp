#include "vsrc/conflict.hpp"

#include <algorithm>

namespace vsrc {

Coloring canonicalize_coloring(const Coloring& c) {
  Coloring out;
  out.color.assign(c.color.size(), -1);
  std::vector<int> remap(c.k, -1);
  int next = 0;
  for (size_t e = 0; e < c.color.size(); ++e) {
    int old = c.color[e];
    if (remap[old] < 0) remap[old] = next++;
    out.color[e] = remap[old];
  }
  out.k = next;
  return out;
}

bool edges_conflict(const Graph& g, const DistanceMatrix& d, int e1, int e2) {
  if (e1 == e2) return false;
  auto [a, b] = g.edge(e1);
  auto [x, y] = g.edge(e2);
  return d(a, y) == d(b, x) + 2 || d(a, x) == d(b, y) + 2 ||
         d(b, y) == d(a, x) + 2 || d(b, x) == d(a, y) + 2;
}

ConflictGraph build_conflict_graph(const Graph& g) {
  return build_conflict_graph(g, DistanceMatrix::bfs_all_pairs(g));
}

ConflictGraph build_conflict_graph(const Graph& g, const DistanceMatrix& d) {
  ConflictGraph cg;
  cg.base = &g;
  int m = g.edge_count();
  cg.adj.resize(m);
  cg.matrix.assign(static_cast<size_t>(m) * m, 0);
  for (int e1 = 0; e1 < m; ++e1) {
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (edges_conflict(g, d, e1, e2)) {
        cg.adj[e1].push_back(e2);
        cg.adj[e2].push_back(e1);
        cg.matrix[static_cast<size_t>(e1) * m + e2] = 1;
        cg.matrix[static_cast<size_t>(e2) * m + e1] = 1;
      }
    }
  }
  return cg;
}

namespace {

// Witness path for a conflicting pair: the orientation satisfying the
// distance test, with a BFS path filling the middle.
Violation make_violation(const Graph& g, const DistanceMatrix& d, int e1, int e2) {
  auto [a, b] = g.edge(e1);
  auto [x, y] = g.edge(e2);
  int u = -1, v = -1, s = -1, t = -1;
  if (d(a, y) == d(b, x) + 2) {
    u = a, v = b, s = x, t = y;
  } else if (d(a, x) == d(b, y) + 2) {
    u = a, v = b, s = y, t = x;
  } else if (d(b, y) == d(a, x) + 2) {
    u = b, v = a, s = x, t = y;
  } else {
    u = b, v = a, s = y, t = x;
  }
  Violation viol;
  viol.edge1 = e1;
  viol.edge2 = e2;
  viol.path.push_back(u);
  for (int w : shortest_path(g, v, s)) viol.path.push_back(w);
  viol.path.push_back(t);
  return viol;
}

}  // namespace

VerificationReport verify_coloring(const Graph& g, const Coloring& c) {
  int m = g.edge_count();
  if (static_cast<int>(c.color.size()) != m) {
    throw ParseError(ParseError::Kind::incomplete_coloring,
                     "coloring covers " + std::to_string(c.color.size()) + " of " +
                         std::to_string(m) + " edges");
  }
  for (int e = 0; e < m; ++e) {
    if (c.color[e] < 0 || c.color[e] >= c.k) {
      throw ParseError(ParseError::Kind::incomplete_coloring,
                       "edge " + g.edge_name(e) + " has color " + std::to_string(c.color[e]) +
                           " outside [0, " + std::to_string(c.k) + ")");
    }
  }

  auto d = DistanceMatrix::bfs_all_pairs(g);
  for (int e1 = 0; e1 < m; ++e1) {
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (c.color[e1] != c.color[e2]) continue;
      if (edges_conflict(g, d, e1, e2)) {
        return {false, make_violation(g, d, e1, e2)};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void enumerate_rec(const Graph& g, const std::vector<int>& dist_to_t, int t, std::uint64_t cap,
                   std::vector<int>& path, std::vector<std::vector<int>>& out) {
  int w = path.back();
  if (w == t) {
    if (out.size() >= cap) {
      throw BudgetError("shortest-path enumeration exceeded cap of " + std::to_string(cap) +
                        " paths");
    }
    out.push_back(path);
    return;
  }
  std::vector<int> next;
  for (const auto& nb : g.neighbors(w)) {
    if (dist_to_t[nb.vertex] == dist_to_t[w] - 1) next.push_back(nb.vertex);
  }
  std::sort(next.begin(), next.end());
  for (int z : next) {
    path.push_back(z);
    enumerate_rec(g, dist_to_t, t, cap, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, int s, int t,
                                                       std::uint64_t cap) {
  if (s == t) throw InvalidInputError("enumerate_shortest_paths requires s != t");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[t] = 0;
  std::vector<int> queue{t};
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path{s};
  enumerate_rec(g, dist, t, cap, path, out);
  return out;
}

}  // namespace vsrc
