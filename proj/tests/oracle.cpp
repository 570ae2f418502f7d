#include "oracle.hpp"

#include "vsrc/experiments.hpp"

namespace vsrc::testing {

namespace {

bool try_color(const std::vector<std::vector<int>>& adj, std::vector<int>& color, size_t v,
               int k) {
  if (v == adj.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int w : adj[v]) {
      if (color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (try_color(adj, color, v + 1, k)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int brute_chromatic(const std::vector<std::vector<int>>& adj) {
  if (adj.empty()) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(adj.size(), -1);
    if (try_color(adj, color, 0, k)) return k;
  }
}

int brute_vsrc(const Graph& g) {
  auto conflicts = conflict_matrix_by_enumeration(g);
  int m = g.edge_count();
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (conflicts[a][b]) adj[a].push_back(b);
    }
  }
  if (m == 0) return 0;
  return brute_chromatic(adj);
}

bool brute_coloring_valid(const Graph& g, const std::vector<int>& edge_colors) {
  auto conflicts = conflict_matrix_by_enumeration(g);
  for (int a = 0; a < g.edge_count(); ++a) {
    for (int b = a + 1; b < g.edge_count(); ++b) {
      if (conflicts[a][b] && edge_colors[a] == edge_colors[b]) return false;
    }
  }
  return true;
}

std::vector<int> bridges_by_deletion(const Graph& g) {
  std::vector<int> out;
  int n = g.vertex_count();
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e == skip) continue;
      auto [u, v] = g.edge(e);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int w : adj[queue[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != n) out.push_back(skip);
  }
  return out;
}

}  // namespace vsrc::testing
