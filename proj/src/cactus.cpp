#include "vsrc/cactus.hpp"

#include <algorithm>
#include <deque>

namespace vsrc {

namespace {

// Position of each edge within a cycle block: edge i connects
// cycle_order[i] and cycle_order[(i+1) % L].
std::vector<int> edge_at_position(const Graph& g, const Block& block) {
  int len = static_cast<int>(block.cycle_order.size());
  std::vector<int> at(len);
  for (int i = 0; i < len; ++i) {
    int u = block.cycle_order[i];
    int v = block.cycle_order[(i + 1) % len];
    at[i] = g.edge_id(u, v);
  }
  return at;
}

}  // namespace

EdgeClassification classify_edges(const Graph& g, const CactusDecomposition& cd) {
  int m = g.edge_count();
  EdgeClassification out;
  out.cls.assign(m, EdgeClass::bridge);
  out.cycle_of.assign(m, -1);
  out.opposite_vertex.assign(m, -1);
  out.opposite_edge.assign(m, -1);

  for (size_t b = 0; b < cd.blocks.size(); ++b) {
    const Block& block = cd.blocks[b];
    if (block.kind == BlockKind::bridge) continue;
    int len = static_cast<int>(block.cycle_order.size());
    auto at = edge_at_position(g, block);
    for (int i = 0; i < len; ++i) {
      int e = at[i];
      out.cycle_of[e] = static_cast<int>(b);
      if (len % 2 == 0) {
        out.cls[e] = EdgeClass::even;
        out.opposite_edge[e] = at[(i + len / 2) % len];
      } else {
        // The unique cycle vertex equidistant from both endpoints of e.
        int vopp = block.cycle_order[(i + (len + 1) / 2) % len];
        out.opposite_vertex[e] = vopp;
        out.cls[e] = g.degree(vopp) > 2 ? EdgeClass::opp : EdgeClass::rem;
      }
    }
  }
  return out;
}

namespace {

int opposite_vertex_of(const Graph& g, const CactusDecomposition& cd, int edge_id) {
  int b = cd.edge_to_block[edge_id];
  if (b < 0 || cd.blocks[b].kind != BlockKind::cycle ||
      cd.blocks[b].cycle_order.size() % 2 == 0) {
    throw InternalError("edge " + g.edge_name(edge_id) + " is not on an odd cycle");
  }
  const Block& block = cd.blocks[b];
  int len = static_cast<int>(block.cycle_order.size());
  auto at = edge_at_position(g, block);
  for (int i = 0; i < len; ++i) {
    if (at[i] == edge_id) return block.cycle_order[(i + (len + 1) / 2) % len];
  }
  throw InternalError("edge not found in its own block");
}

}  // namespace

std::vector<int> opposite_subgraph(const Graph& g, const CactusDecomposition& cd, int edge_id) {
  int b = cd.edge_to_block[edge_id];
  int start = opposite_vertex_of(g, cd, edge_id);
  std::vector<char> seen(g.vertex_count(), 0);
  seen[start] = 1;
  std::deque<int> queue{start};
  std::vector<int> verts{start};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(u)) {
      if (cd.edge_to_block[nb.edge] == b) continue;  // stay off the cycle
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        verts.push_back(nb.vertex);
        queue.push_back(nb.vertex);
      }
    }
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

HcGraph build_hc(const Graph& g, const DistanceMatrix& d, const EdgeClassification& cls,
                 const CactusDecomposition& cd, int block_id) {
  HcGraph h;
  for (int e : cd.blocks[block_id].edge_ids) {
    if (cls.cls[e] == EdgeClass::rem) h.edge_ids.push_back(e);
  }
  std::sort(h.edge_ids.begin(), h.edge_ids.end());
  int k = static_cast<int>(h.edge_ids.size());
  h.adj.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!edges_conflict(g, d, h.edge_ids[i], h.edge_ids[j])) {
        h.adj[i].push_back(j);
        h.adj[j].push_back(i);
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    if (h.adj[i].size() > 2) {
      throw InternalError("degree violation in odd-cycle auxiliary graph at edge " +
                          g.edge_name(h.edge_ids[i]));
    }
  }
  return h;
}

std::vector<std::pair<int, int>> max_matching_deg2(const HcGraph& h) {
  int n = static_cast<int>(h.edge_ids.size());
  std::vector<char> visited(n, 0);
  std::vector<std::pair<int, int>> pairs;

  auto walk_and_match = [&](int start) {
    std::vector<int> chain{start};
    visited[start] = 1;
    int cur = start;
    while (true) {
      int next = -1;
      for (int w : h.adj[cur]) {
        if (!visited[w]) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      visited[next] = 1;
      chain.push_back(next);
      cur = next;
    }
    for (size_t i = 0; i + 1 < chain.size(); i += 2) {
      int a = h.edge_ids[chain[i]], b = h.edge_ids[chain[i + 1]];
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  };

  // Path components first (walks start at endpoints), then cycles.
  for (int v = 0; v < n; ++v) {
    if (!visited[v] && h.adj[v].size() <= 1) walk_and_match(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!visited[v]) walk_and_match(v);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

int find_reuse_edge(const Graph& g, const CactusDecomposition& cd,
                    const EdgeClassification& cls, int opp_edge) {
  if (cls.cls[opp_edge] != EdgeClass::opp) {
    throw InternalError("find_reuse_edge called on a non-opp edge " + g.edge_name(opp_edge));
  }
  int b = cd.edge_to_block[opp_edge];
  int start = cls.opposite_vertex[opp_edge];
  std::vector<char> seen_vertex(g.vertex_count(), 0);
  std::vector<char> seen_edge(g.edge_count(), 0);
  seen_vertex[start] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(u)) {
      if (cd.edge_to_block[nb.edge] == b) continue;
      if (!seen_edge[nb.edge]) {
        seen_edge[nb.edge] = 1;
        EdgeClass c = cls.cls[nb.edge];
        if (c == EdgeClass::bridge || c == EdgeClass::even || c == EdgeClass::rem) {
          return nb.edge;
        }
      }
      if (!seen_vertex[nb.vertex]) {
        seen_vertex[nb.vertex] = 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  throw InternalError("no reusable edge found in the opposite subgraph of " +
                      g.edge_name(opp_edge));
}

CactusColoring color_cactus(const Graph& g) {
  auto check = cactus_decomposition(g);
  if (!check.ok()) {
    throw InvalidInputError("graph is not a cactus: a block has more edges than vertices");
  }
  const CactusDecomposition& cd = *check.decomposition;
  auto d = DistanceMatrix::bfs_all_pairs(g);
  auto cls = classify_edges(g, cd);

  int m = g.edge_count();
  std::vector<int> color(m, -1);
  int next = 0;

  // Bridges: pairwise conflicting, every bridge gets its own color.
  for (int e = 0; e < m; ++e) {
    if (cls.cls[e] == EdgeClass::bridge) color[e] = next++;
  }

  // Even cycles: one fresh color per opposite pair.
  for (size_t b = 0; b < cd.blocks.size(); ++b) {
    const Block& block = cd.blocks[b];
    if (block.kind != BlockKind::cycle || block.cycle_order.size() % 2 != 0) continue;
    int len = static_cast<int>(block.cycle_order.size());
    auto at = edge_at_position(g, block);
    for (int i = 0; i < len / 2; ++i) {
      color[at[i]] = next;
      color[at[i + len / 2]] = next;
      ++next;
    }
  }

  // Odd cycles: fresh colors on the rem edges, shared inside matched pairs of
  // the non-conflict auxiliary graph.
  for (size_t b = 0; b < cd.blocks.size(); ++b) {
    const Block& block = cd.blocks[b];
    if (block.kind != BlockKind::cycle || block.cycle_order.size() % 2 == 0) continue;
    auto h = build_hc(g, d, cls, cd, static_cast<int>(b));
    if (block.cycle_order.size() == 3 && h.edge_ids.size() == 3) {
      // A triangle whose three opposite vertices all have degree 2 is the
      // whole graph; no two of its edges lie on a common shortest path, so a
      // single color covers all three. (The matching count would give 2.)
      for (int e : h.edge_ids) color[e] = next;
      ++next;
      continue;
    }
    std::vector<char> matched(g.edge_count(), 0);
    for (const auto& [e1, e2] : max_matching_deg2(h)) {
      color[e1] = color[e2] = next++;
      matched[e1] = matched[e2] = 1;
    }
    for (int e : h.edge_ids) {
      if (!matched[e]) color[e] = next++;
    }
  }

  // Opp edges reuse the color of a non-conflicting edge inside their
  // opposite subgraph; no new colors are needed.
  for (int e = 0; e < m; ++e) {
    if (cls.cls[e] != EdgeClass::opp) continue;
    int reuse = find_reuse_edge(g, cd, cls, e);
    if (color[reuse] < 0) {
      throw InternalError("reuse edge " + g.edge_name(reuse) + " was not colored yet");
    }
    color[e] = color[reuse];
  }

  CactusColoring out;
  out.k = next;
  out.coloring = {next, std::move(color)};
  auto report = verify_coloring(g, out.coloring);
  if (!report.valid) {
    throw InternalError("cactus coloring failed verification");
  }
  return out;
}

}  // namespace vsrc
