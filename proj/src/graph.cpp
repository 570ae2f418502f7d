#include "vsrc/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace vsrc {

namespace {

long long pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<long long>(u) * (1LL << 31) + v;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n <= 0) throw ParseError(ParseError::Kind::malformed_line, "graph needs at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(ParseError::Kind::malformed_line,
                       "edge " + std::to_string(a) + "-" + std::to_string(b) +
                           " uses a vertex label outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw ParseError(ParseError::Kind::self_loop, "self-loop " + std::to_string(a) + "-" + std::to_string(b));
    }
    int u = std::min(a, b), v = std::max(a, b);
    if (g.edge_ids_.count(pair_key(u, v))) {
      throw ParseError(ParseError::Kind::duplicate_edge,
                       "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    int id = static_cast<int>(g.edges_.size());
    g.edge_ids_.emplace(pair_key(u, v), id);
    g.edges_.emplace_back(u, v);
    g.adj_[u].push_back({v, id});
    g.adj_[v].push_back({u, id});
  }

  // Connectivity: a very strong rainbow coloring is defined through shortest
  // paths between every vertex pair, so disconnected inputs are rejected.
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& nb : g.adj_[u]) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        queue.push_back(nb.vertex);
      }
    }
  }
  if (reached != n) {
    int missing = 0;
    while (seen[missing]) ++missing;
    throw ParseError(ParseError::Kind::disconnected,
                     "graph is disconnected: vertex " + std::to_string(missing) +
                         " is unreachable from vertex 0");
  }
  return g;
}

int Graph::edge_id(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto it = edge_ids_.find(pair_key(u, v));
  return it == edge_ids_.end() ? -1 : it->second;
}

std::string Graph::edge_name(int id) const {
  const auto& [u, v] = edges_[id];
  return std::to_string(u) + "-" + std::to_string(v);
}

Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  int header_n = -1;
  long long header_m = -1;
  int max_label = -1;
  bool saw_any = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;   // blank
    if (tok[0] == '#') continue;  // comment

    auto malformed = [&](const std::string& why) -> ParseError {
      return ParseError(ParseError::Kind::malformed_line,
                        "line " + std::to_string(lineno) + ": " + why + " (got \"" + line + "\")");
    };

    if (tok == "p") {
      if (saw_any || header_n >= 0) throw malformed("header must be the first non-comment line");
      long long n = 0, m = 0;
      if (!(ls >> n >> m) || n <= 0 || m < 0) throw malformed("expected header \"p <n> <m>\"");
      std::string extra;
      if (ls >> extra) throw malformed("trailing tokens after header");
      header_n = static_cast<int>(n);
      header_m = m;
      continue;
    }

    saw_any = true;
    long long u = 0, v = 0;
    {
      std::istringstream es(line);
      if (!(es >> u >> v) || u < 0 || v < 0) throw malformed("expected edge \"<u> <v>\" with nonnegative labels");
      std::string extra;
      if (es >> extra) throw malformed("trailing tokens after edge");
    }
    if (u == v) {
      throw ParseError(ParseError::Kind::self_loop,
                       "line " + std::to_string(lineno) + ": self-loop " + std::to_string(u) + "-" +
                           std::to_string(v));
    }
    if (header_n >= 0 && (u >= header_n || v >= header_n)) {
      throw malformed("vertex label exceeds declared vertex count " + std::to_string(header_n));
    }
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      throw ParseError(ParseError::Kind::duplicate_edge,
                       "line " + std::to_string(lineno) + ": duplicate edge " + std::to_string(e.first) +
                           "-" + std::to_string(e.second));
    }
    edges.push_back(e);
    max_label = std::max(max_label, e.second);
  }

  if (header_m >= 0 && header_m != static_cast<long long>(edges.size())) {
    throw ParseError(ParseError::Kind::malformed_line,
                     "header declares " + std::to_string(header_m) + " edges but " +
                         std::to_string(edges.size()) + " were given");
  }
  int n = std::max(header_n, max_label + 1);
  if (n <= 0) throw ParseError(ParseError::Kind::malformed_line, "empty input: no header and no edges");
  return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

DistanceMatrix DistanceMatrix::bfs_all_pairs(const Graph& g) {
  DistanceMatrix dm;
  int n = g.vertex_count();
  dm.n_ = n;
  dm.d_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    int* dist = &dm.d_[static_cast<size_t>(s) * n];
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (const auto& nb : g.neighbors(u)) {
        if (dist[nb.vertex] < 0) {
          dist[nb.vertex] = dist[u] + 1;
          queue.push_back(nb.vertex);
        }
      }
    }
  }
  return dm;
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int x : d_) best = std::max(best, x);
  return best;
}

std::vector<int> shortest_path(const Graph& g, int s, int t) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (const auto& nb : g.neighbors(u)) {
      if (parent[nb.vertex] < 0) {
        parent[nb.vertex] = u;
        queue.push_back(nb.vertex);
      }
    }
  }
  std::vector<int> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<BiconnectedComponent> biconnected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<BiconnectedComponent> comps;

  struct Frame {
    int v;
    int parent_edge;
    size_t cursor;
  };

  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.cursor < nbrs.size()) {
        auto [w, eid] = nbrs[f.cursor++];
        if (eid == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(eid);
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(eid);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (stack.empty()) continue;
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] >= disc[parent.v]) {
          BiconnectedComponent comp;
          while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            comp.edge_ids.push_back(e);
            if (e == done.parent_edge) break;
          }
          std::sort(comp.edge_ids.begin(), comp.edge_ids.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.edge_ids.front() < b.edge_ids.front();
  });
  return comps;
}

std::vector<int> bridge_edges(const Graph& g) {
  std::vector<int> out;
  for (const auto& comp : biconnected_components(g)) {
    if (comp.edge_ids.size() == 1) out.push_back(comp.edge_ids.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CactusCheck cactus_decomposition(const Graph& g) {
  CactusCheck result;
  CactusDecomposition cd;
  cd.edge_to_block.assign(g.edge_count(), -1);

  for (const auto& comp : biconnected_components(g)) {
    Block block;
    block.edge_ids = comp.edge_ids;
    if (comp.edge_ids.size() == 1) {
      block.kind = BlockKind::bridge;
    } else {
      // A 2-connected block is a single cycle exactly when it has as many
      // edges as vertices.
      std::vector<int> verts;
      for (int e : comp.edge_ids) {
        verts.push_back(g.edge(e).first);
        verts.push_back(g.edge(e).second);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      if (verts.size() != comp.edge_ids.size()) {
        result.witness_block = comp.edge_ids;
        return result;
      }
      block.kind = BlockKind::cycle;

      // Walk the cycle starting at the smallest vertex, moving toward its
      // smaller neighbor.
      std::unordered_map<int, std::vector<int>> local;
      for (int e : comp.edge_ids) {
        auto [u, v] = g.edge(e);
        local[u].push_back(v);
        local[v].push_back(u);
      }
      for (auto& [v, ns] : local) std::sort(ns.begin(), ns.end());
      int start = verts.front();
      int prev = start;
      int cur = local[start].front();
      block.cycle_order.push_back(start);
      while (cur != start) {
        block.cycle_order.push_back(cur);
        const auto& ns = local[cur];
        int next = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = next;
      }
    }
    int block_id = static_cast<int>(cd.blocks.size());
    for (int e : block.edge_ids) cd.edge_to_block[e] = block_id;
    cd.blocks.push_back(std::move(block));
  }
  result.decomposition = std::move(cd);
  return result;
}

BipartiteCheck is_bipartite_adjacency(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  BipartiteCheck result;
  result.side.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (result.side[root] >= 0) continue;
    result.side[root] = 0;
    parent[root] = root;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (result.side[w] < 0) {
          result.side[w] = result.side[u] ^ 1;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (result.side[w] == result.side[u] && w != u) {
          // Closed odd walk: climb both endpoints to their meeting point,
          // then close the walk with the offending edge.
          std::vector<int> up_u{u}, up_w{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          result.odd_walk = up_u;  // u .. meet
          for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) result.odd_walk.push_back(*it);
          result.odd_walk.push_back(u);  // meet .. w, then edge wu
          result.bipartite = false;
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  return result;
}

BipartiteCheck is_bipartite(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const auto& nb : g.neighbors(v)) adj[v].push_back(nb.vertex);
  }
  return is_bipartite_adjacency(adj);
}

}  // namespace vsrc
