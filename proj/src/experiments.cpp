#include "vsrc/experiments.hpp"

#include <algorithm>
#include <sstream>

#include "vsrc/cactus.hpp"
#include "vsrc/conflict.hpp"
#include "vsrc/instances.hpp"

namespace vsrc {

std::vector<std::vector<char>> conflict_matrix_by_enumeration(const Graph& g, std::uint64_t cap) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<std::vector<char>> conflicts(m, std::vector<char>(m, 0));
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      for (const auto& path : enumerate_shortest_paths(g, s, t, cap)) {
        std::vector<int> ids;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          ids.push_back(g.edge_id(path[i], path[i + 1]));
        }
        for (size_t a = 0; a < ids.size(); ++a) {
          for (size_t b = a + 1; b < ids.size(); ++b) {
            conflicts[ids[a]][ids[b]] = conflicts[ids[b]][ids[a]] = 1;
          }
        }
      }
    }
  }
  return conflicts;
}

Graph random_cactus_bounded(std::uint64_t seed, int max_m) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng(SplitMix64(seed).next() ^ (attempt * 0x9E3779B97F4A7C15ULL));
    GenSpec spec;
    spec.family = Family::random_cactus;
    spec.blocks = 1 + static_cast<int>(rng.below(5));
    spec.max_len = 3 + static_cast<int>(rng.below(5));
    spec.seed = rng.next();
    Graph g = generate(spec);
    if (g.edge_count() <= max_m) return g;
  }
}

Graph random_pool_graph(std::uint64_t seed, int max_n) {
  SplitMix64 rng(seed);
  GenSpec spec;
  spec.family = Family::random_connected;
  spec.n = 2 + static_cast<int>(rng.below(max_n - 1));
  spec.p = 0.1 + 0.8 * rng.unit();
  spec.seed = rng.next();
  return generate(spec);
}

ExperimentResult run_cactus_vs_exact(int count, std::uint64_t seed, int max_m,
                                     const SearchBudget& budget) {
  ExperimentResult result;
  result.suite = "cactus-vs-exact";
  for (int i = 0; i < count; ++i) {
    Graph g = random_cactus_bounded(seed + i, max_m);
    ExperimentRow row;
    std::ostringstream label;
    label << "seed=" << seed + i << " n=" << g.vertex_count() << " m=" << g.edge_count();
    row.label = label.str();
    auto cactus = color_cactus(g);  // verifies internally
    auto exact = vsrc_exact(g, budget);
    std::ostringstream detail;
    detail << "cactus k=" << cactus.k << " exact k=" << exact.k;
    row.detail = detail.str();
    row.pass = exact.exact && cactus.k == exact.k;
    result.rows.push_back(std::move(row));
  }
  return result;
}

ExperimentResult run_conflict_oracle(int count, std::uint64_t seed, int max_n) {
  ExperimentResult result;
  result.suite = "conflict-oracle";
  for (int i = 0; i < count; ++i) {
    Graph g = random_pool_graph(seed + i, max_n);
    ExperimentRow row;
    std::ostringstream label;
    label << "seed=" << seed + i << " n=" << g.vertex_count() << " m=" << g.edge_count();
    row.label = label.str();
    row.pass = true;
    auto d = DistanceMatrix::bfs_all_pairs(g);
    auto oracle = conflict_matrix_by_enumeration(g);
    for (int e1 = 0; e1 < g.edge_count() && row.pass; ++e1) {
      for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
        bool fast = edges_conflict(g, d, e1, e2);
        if (fast != (oracle[e1][e2] != 0)) {
          row.pass = false;
          row.detail = "mismatch at edges " + g.edge_name(e1) + ", " + g.edge_name(e2) +
                       ": test says " + (fast ? "conflict" : "no conflict") +
                       ", enumeration says the opposite";
          break;
        }
      }
    }
    if (row.pass) row.detail = "all pairs agree";
    result.rows.push_back(std::move(row));
  }
  return result;
}

ExperimentResult run_reduction(int count, std::uint64_t seed, int max_n,
                               const SearchBudget& budget) {
  ExperimentResult result;
  result.suite = "reduction";
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng(seed + i);
    bool colorable_side = i % 2 == 0;
    EdgeList base;
    if (colorable_side) {
      int n = 3 + static_cast<int>(rng.below(max_n - 2));
      base = planted_3colorable(n, 0.3 + 0.6 * rng.unit(), rng.next());
    } else {
      // Random connected graph with a K4 planted on four random vertices.
      int n = 4 + static_cast<int>(rng.below(std::max(1, max_n - 3)));
      GenSpec spec;
      spec.family = Family::random_connected;
      spec.n = n;
      spec.p = 0.2 + 0.5 * rng.unit();
      spec.seed = rng.next();
      base = generate(spec).as_edge_list();
      std::vector<int> verts(n);
      for (int v = 0; v < n; ++v) verts[v] = v;
      for (int v = n - 1; v > 0; --v) std::swap(verts[v], verts[rng.below(v + 1)]);
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          Edge e{std::min(verts[a], verts[b]), std::max(verts[a], verts[b])};
          if (std::find(base.edges.begin(), base.edges.end(), e) == base.edges.end()) {
            base.edges.push_back(e);
          }
        }
      }
    }

    // 3-colorability of the base graph, decided exactly.
    AdjList adj(base.n);
    for (const auto& [u, v] : base.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    auto chi = chromatic_number(adj, budget);
    Graph gadget = reduce_3col(base);
    auto exact = vsrc_exact(gadget, budget);

    ExperimentRow row;
    std::ostringstream label;
    label << "seed=" << seed + i << " " << (colorable_side ? "planted-3col" : "with-K4")
          << " n=" << base.n;
    row.label = label.str();
    std::ostringstream detail;
    detail << "chi(base)=" << chi.chi << " vsrc(gadget)=" << exact.k;
    row.detail = detail.str();
    row.pass = chi.exact && exact.exact && ((chi.chi <= 3) == (exact.k <= 3)) &&
               (colorable_side ? chi.chi <= 3 : chi.chi >= 4);
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace vsrc
