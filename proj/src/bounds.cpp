#include "vsrc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace vsrc {

namespace {

void check_partition(const Graph& g, const CliquePartition& p, const char* what) {
  std::vector<int> part_of(g.vertex_count(), -1);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (int v : p.parts[i]) {
      if (v < 0 || v >= g.vertex_count() || part_of[v] >= 0) {
        throw InvalidInputError(std::string(what) + ": vertex " + std::to_string(v) +
                                " missing, repeated, or out of range");
      }
      part_of[v] = static_cast<int>(i);
    }
    for (size_t a = 0; a < p.parts[i].size(); ++a) {
      for (size_t b = a + 1; b < p.parts[i].size(); ++b) {
        if (!g.has_edge(p.parts[i][a], p.parts[i][b])) {
          throw InvalidInputError(std::string(what) + ": part " + std::to_string(i) +
                                  " is not a clique (" + std::to_string(p.parts[i][a]) + "," +
                                  std::to_string(p.parts[i][b]) + " not adjacent)");
        }
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (part_of[v] < 0) {
      throw InvalidInputError(std::string(what) + ": vertex " + std::to_string(v) +
                              " is not covered");
    }
  }
}

}  // namespace

Coloring coloring_from_clique_partition(const Graph& g, const CliquePartition& p) {
  check_partition(g, p, "invalid clique partition");
  std::vector<int> part_of(g.vertex_count());
  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (int v : p.parts[i]) part_of[v] = static_cast<int>(i);
  }
  std::map<std::pair<int, int>, int> color_of_pair;
  Coloring c;
  c.color.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int a = std::min(part_of[u], part_of[v]);
    int b = std::max(part_of[u], part_of[v]);
    auto [it, fresh] = color_of_pair.try_emplace({a, b}, c.k);
    if (fresh) ++c.k;
    c.color[e] = it->second;
  }
  return c;
}

Coloring coloring_from_intersection_rep(const Graph& g, const IntersectionRep& rep) {
  int n = g.vertex_count();
  if (static_cast<int>(rep.sets.size()) != n) {
    throw InvalidInputError("representation has " + std::to_string(rep.sets.size()) +
                            " sets for " + std::to_string(n) + " vertices");
  }
  auto smallest_shared = [&](int u, int v) -> int {
    const auto& a = rep.sets[u];
    const auto& b = rep.sets[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return a[i];
      if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return -1;
  };

  // Exactness check: edges intersect, non-edges do not.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool shares = smallest_shared(u, v) >= 0;
      if (shares != g.has_edge(u, v)) {
        throw InvalidInputError(
            "not an intersection representation of this graph: vertices " + std::to_string(u) +
            "," + std::to_string(v) + (shares ? " share an element without an edge"
                                              : " have an edge but disjoint sets"));
      }
    }
  }

  std::vector<int> color_of_element(rep.universe.size(), -1);
  Coloring c;
  c.color.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int x = smallest_shared(u, v);
    if (color_of_element[x] < 0) color_of_element[x] = c.k++;
    c.color[e] = color_of_element[x];
  }
  return c;
}

Coloring coloring_from_ecc(const Graph& g, const EdgeCliqueCover& cover) {
  std::vector<char> covered(g.edge_count(), 0);
  for (size_t i = 0; i < cover.cliques.size(); ++i) {
    const auto& q = cover.cliques[i];
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] < 0 || q[a] >= g.vertex_count()) {
        throw InvalidInputError("invalid edge clique cover: vertex out of range");
      }
      for (size_t b = a + 1; b < q.size(); ++b) {
        int e = g.edge_id(q[a], q[b]);
        if (e < 0) {
          throw InvalidInputError("invalid edge clique cover: clique " + std::to_string(i) +
                                  " contains the non-edge " + std::to_string(q[a]) + "-" +
                                  std::to_string(q[b]));
        }
        covered[e] = 1;
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!covered[e]) {
      throw InvalidInputError("invalid edge clique cover: edge " + g.edge_name(e) +
                              " is not covered");
    }
  }

  IntersectionRep rep;
  rep.sets.resize(g.vertex_count());
  for (size_t i = 0; i < cover.cliques.size(); ++i) {
    rep.universe.push_back("q" + std::to_string(i));
    for (int v : cover.cliques[i]) rep.sets[v].push_back(static_cast<int>(i));
  }
  for (auto& s : rep.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return coloring_from_intersection_rep(g, rep);
}

namespace {

std::vector<int> lex_bfs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (visited[u]) continue;
      if (v < 0 || label[u] > label[v]) v = u;
    }
    visited[v] = 1;
    order.push_back(v);
    for (const auto& nb : g.neighbors(v)) {
      if (!visited[nb.vertex]) label[nb.vertex].push_back(n - step);
    }
  }
  return order;
}

// Any non-chordal graph has a triple (v; u, w) with u, w non-adjacent
// neighbors of v joined by a path avoiding the rest of N[v]; the shortest
// such path closes a chordless cycle through v.
std::vector<int> find_chordless_cycle(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const auto& nbs = g.neighbors(v);
    for (size_t a = 0; a < nbs.size(); ++a) {
      for (size_t b = a + 1; b < nbs.size(); ++b) {
        int u = nbs[a].vertex, w = nbs[b].vertex;
        if (g.has_edge(u, w)) continue;
        std::vector<char> allowed(n, 1);
        allowed[v] = 0;
        for (const auto& nb : g.neighbors(v)) allowed[nb.vertex] = 0;
        allowed[u] = allowed[w] = 1;
        // BFS from u to w within the allowed vertices.
        std::vector<int> parent(n, -1);
        parent[u] = u;
        std::vector<int> queue{u};
        for (size_t head = 0; head < queue.size() && parent[w] < 0; ++head) {
          int x = queue[head];
          for (const auto& nb : g.neighbors(x)) {
            if (allowed[nb.vertex] && parent[nb.vertex] < 0) {
              parent[nb.vertex] = x;
              queue.push_back(nb.vertex);
            }
          }
        }
        if (parent[w] < 0) continue;
        std::vector<int> cycle{v};
        std::vector<int> path{w};
        while (path.back() != u) path.push_back(parent[path.back()]);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalColoring chordal_coloring(const Graph& g) {
  ChordalColoring out;
  int n = g.vertex_count();
  auto visit = lex_bfs_order(g);
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  // Perfect elimination check: each vertex's later neighbors must be
  // pairwise covered through the earliest of them.
  for (int i = 0; i < n; ++i) {
    int v = peo[i];
    int u = -1;
    for (const auto& nb : g.neighbors(v)) {
      if (pos[nb.vertex] > i && (u < 0 || pos[nb.vertex] < pos[u])) u = nb.vertex;
    }
    if (u < 0) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (pos[nb.vertex] > i && nb.vertex != u && !g.has_edge(u, nb.vertex)) {
        out.chordal = false;
        out.witness_cycle = find_chordless_cycle(g);
        return out;
      }
    }
  }
  out.chordal = true;

  // Maximal cliques, built by scanning the elimination order backwards: a
  // vertex either completes an existing clique that equals its later
  // neighborhood, or opens a new one.
  std::vector<std::vector<int>> cliques;  // sorted vertex lists
  for (int i = n - 1; i >= 0; --i) {
    int v = peo[i];
    std::vector<int> later;
    for (const auto& nb : g.neighbors(v)) {
      if (pos[nb.vertex] > i) later.push_back(nb.vertex);
    }
    std::sort(later.begin(), later.end());
    bool absorbed = false;
    for (auto& q : cliques) {
      if (q == later) {
        q.push_back(v);
        std::sort(q.begin(), q.end());
        absorbed = true;
        break;
      }
    }
    if (!absorbed) {
      later.push_back(v);
      std::sort(later.begin(), later.end());
      cliques.push_back(std::move(later));
    }
  }

  out.clique_count = static_cast<int>(cliques.size());
  for (const auto& q : cliques) out.omega = std::max(out.omega, static_cast<int>(q.size()));

  IntersectionRep rep;
  rep.sets.resize(n);
  for (size_t i = 0; i < cliques.size(); ++i) {
    rep.universe.push_back("t" + std::to_string(i));
    for (int v : cliques[i]) rep.sets[v].push_back(static_cast<int>(i));
  }
  for (auto& s : rep.sets) std::sort(s.begin(), s.end());
  out.coloring = coloring_from_intersection_rep(g, rep);
  return out;
}

namespace {

double normalize_angle(double a) {
  a = std::fmod(a, 360.0);
  if (a < 0) a += 360.0;
  return a;
}

bool arc_contains(const Arc& arc, double point) {
  double s = normalize_angle(arc.start);
  double e = normalize_angle(arc.end);
  double p = normalize_angle(point);
  if (s <= e) return s <= p && p <= e;
  return p >= s || p <= e;
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  return arc_contains(a, b.start) || arc_contains(b, a.start);
}

}  // namespace

Coloring circular_arc_coloring(const std::vector<Arc>& arcs, const Graph& g) {
  int n = g.vertex_count();
  if (static_cast<int>(arcs.size()) != n) {
    throw InvalidInputError("arc count " + std::to_string(arcs.size()) +
                            " does not match vertex count " + std::to_string(n));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (arcs_intersect(arcs[u], arcs[v]) != g.has_edge(u, v)) {
        throw InvalidInputError("arcs " + std::to_string(u) + " and " + std::to_string(v) +
                                " disagree with the graph's edges");
      }
    }
  }
  IntersectionRep rep;
  rep.sets.resize(n);
  for (int j = 0; j < n; ++j) rep.universe.push_back("end" + std::to_string(j));
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < n; ++j) {
      if (arc_contains(arcs[v], arcs[j].end)) rep.sets[v].push_back(j);
    }
  }
  return coloring_from_intersection_rep(g, rep);
}

Graph hat_graph(const EdgeList& g) {
  std::vector<Edge> edges = g.edges;
  for (int v = 0; v < g.n; ++v) edges.emplace_back(v, g.n);
  return Graph::from_edges(g.n + 1, edges);
}

Graph hat_graph(const Graph& g) { return hat_graph(g.as_edge_list()); }

Coloring hat_cp3_coloring(const EdgeList& g, const CliquePartition& p) {
  if (p.parts.size() > 3) {
    throw InvalidInputError("clique partition has " + std::to_string(p.parts.size()) +
                            " parts; at most 3 are supported");
  }
  std::vector<int> part_of(g.n, -1);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (int v : p.parts[i]) {
      if (v < 0 || v >= g.n || part_of[v] >= 0) {
        throw InvalidInputError("invalid clique partition: vertex " + std::to_string(v) +
                                " repeated or out of range");
      }
      part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (part_of[v] < 0) {
      throw InvalidInputError("invalid clique partition: vertex " + std::to_string(v) +
                              " is not covered");
    }
  }
  std::vector<std::vector<char>> adjacent(g.n, std::vector<char>(g.n, 0));
  for (const auto& [u, v] : g.edges) adjacent[u][v] = adjacent[v][u] = 1;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (size_t a = 0; a < p.parts[i].size(); ++a) {
      for (size_t b = a + 1; b < p.parts[i].size(); ++b) {
        if (!adjacent[p.parts[i][a]][p.parts[i][b]]) {
          throw InvalidInputError("invalid clique partition: part " + std::to_string(i) +
                                  " is not a clique");
        }
      }
    }
  }

  // Edge order matches hat_graph: base edges first, then spokes.
  Coloring c;
  std::vector<int> used(3, 0);
  for (const auto& [u, v] : g.edges) {
    int i = part_of[u], j = part_of[v];
    int col = (i == j) ? i : 3 - i - j;
    c.color.push_back(col);
    used[col] = 1;
  }
  for (int v = 0; v < g.n; ++v) {
    c.color.push_back(part_of[v]);
    used[part_of[v]] = 1;
  }
  int distinct = used[0] + used[1] + used[2];
  // Color values must stay inside [0, k); remap densely.
  std::vector<int> remap(3, -1);
  int next = 0;
  for (int col = 0; col < 3; ++col) {
    if (used[col]) remap[col] = next++;
  }
  for (int& col : c.color) col = remap[col];
  c.k = distinct;
  return c;
}

GroupableCheck k_perfectly_groupable(const Graph& g, int k, const SearchBudget& budget) {
  GroupableCheck out;
  out.neighborhood_parts.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nbs;
    for (const auto& nb : g.neighbors(v)) nbs.push_back(nb.vertex);
    std::sort(nbs.begin(), nbs.end());
    int deg = static_cast<int>(nbs.size());
    if (deg > 20) {
      throw BudgetError("neighborhood of vertex " + std::to_string(v) + " has " +
                        std::to_string(deg) + " vertices; exact partitioning is off budget");
    }
    // Minimum clique partition of the neighborhood = chromatic number of the
    // complement of the induced subgraph.
    AdjList comp(deg);
    for (int a = 0; a < deg; ++a) {
      for (int b = 0; b < deg; ++b) {
        if (a != b && !g.has_edge(nbs[a], nbs[b])) comp[a].push_back(b);
      }
    }
    auto cr = chromatic_number(comp, budget);
    if (!cr.exact) {
      throw BudgetError("neighborhood partition search ran out of budget at vertex " +
                        std::to_string(v));
    }
    std::vector<std::vector<int>> parts(cr.chi);
    for (int a = 0; a < deg; ++a) parts[cr.witness[a]].push_back(nbs[a]);
    out.neighborhood_parts[v] = std::move(parts);
    if (cr.chi > k && out.failing_vertex < 0) out.failing_vertex = v;
  }
  out.groupable = out.failing_vertex < 0;
  return out;
}

CliquePartition clique_partition_exact(const Graph& g, const SearchBudget& budget) {
  int n = g.vertex_count();
  AdjList comp(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !g.has_edge(u, v)) comp[u].push_back(v);
    }
  }
  auto cr = chromatic_number(comp, budget);
  if (!cr.exact) {
    throw BudgetError("clique partition search ran out of budget (lower " +
                      std::to_string(cr.lower) + ", upper " + std::to_string(cr.upper) + ")");
  }
  CliquePartition p;
  p.parts.resize(cr.chi);
  for (int v = 0; v < n; ++v) p.parts[cr.witness[v]].push_back(v);
  std::sort(p.parts.begin(), p.parts.end());
  return p;
}

EdgeCliqueCover greedy_edge_clique_cover(const Graph& g) {
  EdgeCliqueCover cover;
  std::vector<char> covered(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (covered[e]) continue;
    auto [u, v] = g.edge(e);
    std::vector<int> clique{u, v};
    for (int w = 0; w < g.vertex_count(); ++w) {
      bool ok = true;
      for (int c : clique) {
        if (w == c || !g.has_edge(w, c)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    for (size_t a = 0; a < clique.size(); ++a) {
      for (size_t b = a + 1; b < clique.size(); ++b) {
        covered[g.edge_id(clique[a], clique[b])] = 1;
      }
    }
    cover.cliques.push_back(std::move(clique));
  }
  return cover;
}

EdgeCliqueCover quarter_edge_clique_cover(const Graph& g) {
  int n = g.vertex_count();
  EdgeCliqueCover cover;
  std::vector<char> active(n, 1);
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) adjacent[u][v] = adjacent[v][u] = 1;

  while (true) {
    int u = -1, v = -1;
    for (int a = 0; a < n && u < 0; ++a) {
      if (!active[a]) continue;
      for (int b = a + 1; b < n; ++b) {
        if (active[b] && adjacent[a][b]) {
          u = a;
          v = b;
          break;
        }
      }
    }
    if (u < 0) break;
    std::vector<int> common, only_u, only_v;
    for (int w = 0; w < n; ++w) {
      if (!active[w] || w == u || w == v) continue;
      bool au = adjacent[u][w], av = adjacent[v][w];
      if (au && av) {
        common.push_back(w);
      } else if (au) {
        only_u.push_back(w);
      } else if (av) {
        only_v.push_back(w);
      }
    }
    for (int w : common) cover.cliques.push_back({u, v, w});
    for (int w : only_u) cover.cliques.push_back({std::min(u, w), std::max(u, w)});
    for (int w : only_v) cover.cliques.push_back({std::min(v, w), std::max(v, w)});
    if (common.empty()) cover.cliques.push_back({u, v});
    active[u] = active[v] = 0;
  }
  return cover;
}

BoundsReport vsrc_bounds(const Graph& g, const SearchBudget& budget) {
  BoundsReport report;
  auto d = DistanceMatrix::bfs_all_pairs(g);
  auto cg = build_conflict_graph(g, d);

  report.lower.diameter = d.diameter();
  report.lower.bridges = static_cast<int>(bridge_edges(g).size());

  // Largest minimum clique partition over the neighborhoods; any single
  // vertex certifies the bound, so oversized neighborhoods are just skipped.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 16) continue;
    std::vector<int> nbs;
    for (const auto& nb : g.neighbors(v)) nbs.push_back(nb.vertex);
    AdjList comp(nbs.size());
    for (size_t a = 0; a < nbs.size(); ++a) {
      for (size_t b = 0; b < nbs.size(); ++b) {
        if (a != b && !g.has_edge(nbs[a], nbs[b])) comp[a].push_back(static_cast<int>(b));
      }
    }
    auto cr = chromatic_number(comp, budget);
    if (cr.exact && cr.chi > report.lower.groupable) {
      report.lower.groupable = cr.chi;
      report.lower.groupable_vertex = v;
    }
  }

  auto clique = max_clique(cg.adj, {std::min<std::uint64_t>(budget.max_nodes, 200'000)});
  report.lower.conflict_clique = static_cast<int>(clique.vertices.size());
  report.lower.conflict_clique_edges = clique.vertices;

  report.lower.value = std::max({report.lower.diameter, report.lower.bridges,
                                 report.lower.groupable, report.lower.conflict_clique});

  auto add_upper = [&](const std::string& method, Coloring c) {
    auto rep = verify_coloring(g, c);
    if (!rep.valid) {
      throw InternalError("bound coloring from " + method + " failed verification");
    }
    report.upper_candidates.push_back({method, c.k, std::move(c)});
  };

  {
    Coloring identity;
    identity.k = g.edge_count();
    identity.color.resize(g.edge_count());
    std::iota(identity.color.begin(), identity.color.end(), 0);
    add_upper("edge_count", std::move(identity));
  }
  add_upper("ecc_greedy", coloring_from_ecc(g, greedy_edge_clique_cover(g)));
  add_upper("quarter_n2", coloring_from_ecc(g, quarter_edge_clique_cover(g)));
  if (g.vertex_count() <= 20) {
    try {
      add_upper("clique_partition",
                coloring_from_clique_partition(g, clique_partition_exact(g, budget)));
    } catch (const BudgetError&) {
      // skipped
    }
  }
  {
    auto ch = chordal_coloring(g);
    if (ch.chordal) add_upper("chordal", std::move(ch.coloring));
  }
  if (cactus_decomposition(g).ok()) {
    add_upper("cactus", color_cactus(g).coloring);
  }

  report.upper = report.upper_candidates.front().k;
  report.upper_method = report.upper_candidates.front().method;
  for (const auto& cand : report.upper_candidates) {
    if (cand.k < report.upper) {
      report.upper = cand.k;
      report.upper_method = cand.method;
    }
  }
  return report;
}

}  // namespace vsrc
