#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "vsrc/exact.hpp"
#include "vsrc/experiments.hpp"
#include "vsrc/instances.hpp"

using namespace vsrc;

namespace {

AdjList adjacency_of(const Graph& g) {
  AdjList adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph petersen() {
  return parse_graph(
      "0 1\n1 2\n2 3\n3 4\n4 0\n"
      "5 7\n7 9\n9 6\n6 8\n8 5\n"
      "0 5\n1 6\n2 7\n3 8\n4 9\n");
}

}  // namespace

TEST_CASE("chromatic_number on fixed graphs") {
  CHECK(chromatic_number({}).chi == 0);
  CHECK(chromatic_number(AdjList(5)).chi == 1);

  auto c5 = adjacency_of(generate({.family = Family::cycle, .n = 5}));
  auto r = chromatic_number(c5);
  CHECK(r.chi == 3);
  CHECK(r.exact);

  auto k6 = adjacency_of(generate({.family = Family::complete, .n = 6}));
  CHECK(chromatic_number(k6).chi == 6);

  CHECK(chromatic_number(adjacency_of(petersen())).chi == 3);

  auto k33 = adjacency_of(generate({.family = Family::complete_bipartite, .a = 3, .b = 3}));
  CHECK(chromatic_number(k33).chi == 2);
}

TEST_CASE("chromatic witness is proper and uses chi colors") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_pool_graph(seed, 10);
    auto adj = adjacency_of(g);
    auto r = chromatic_number(adj);
    REQUIRE(r.exact);
    int max_color = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      max_color = std::max(max_color, r.witness[v]);
      for (int w : adj[v]) CHECK(r.witness[v] != r.witness[w]);
    }
    CHECK(max_color + 1 == r.chi);
  }
}

TEST_CASE("branch and bound agrees with inclusion-exclusion") {
  // Petersen-sized random graphs, both engines.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_pool_graph(seed * 131, 10);
    auto adj = adjacency_of(g);
    auto r = chromatic_number(adj);
    REQUIRE(r.exact);
    auto below = chromatic_decision_ie(adj, r.chi - 1);
    auto at = chromatic_decision_ie(adj, r.chi);
    REQUIRE(below.has_value());
    REQUIRE(at.has_value());
    CHECK(!*below);
    CHECK(*at);
  }
  // And against the naive backtracking oracle.
  for (std::uint64_t seed = 200; seed <= 215; ++seed) {
    auto adj = adjacency_of(random_pool_graph(seed, 8));
    CHECK(chromatic_number(adj).chi == testing::brute_chromatic(adj));
  }
}

TEST_CASE("inclusion-exclusion refuses oversized inputs") {
  CHECK(!chromatic_decision_ie(AdjList(25), 3).has_value());
  CHECK(chromatic_decision_ie(AdjList(1), 1).value());
}

TEST_CASE("max_clique") {
  auto k5 = adjacency_of(generate({.family = Family::complete, .n = 5}));
  CHECK(max_clique(k5).vertices.size() == 5);

  auto c6 = adjacency_of(generate({.family = Family::cycle, .n = 6}));
  CHECK(max_clique(c6).vertices.size() == 2);

  CHECK(max_clique(adjacency_of(petersen())).vertices.size() == 2);

  for (std::uint64_t seed = 300; seed <= 330; ++seed) {
    auto adj = adjacency_of(random_pool_graph(seed, 9));
    auto clique = max_clique(adj);
    REQUIRE(clique.exact);
    // Clique is really a clique.
    for (size_t a = 0; a < clique.vertices.size(); ++a) {
      for (size_t b = a + 1; b < clique.vertices.size(); ++b) {
        int u = clique.vertices[a], v = clique.vertices[b];
        CHECK(std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end());
      }
    }
    // And it is as large as the complement's chromatic witness allows:
    // chi(complement) parts cover V with cliques, so omega >= n / parts.
    int n = static_cast<int>(adj.size());
    AdjList comp(n);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end()) {
          comp[u].push_back(v);
        }
      }
    }
    // omega(G) = alpha(complement) >= n / chi(complement).
    int cover = chromatic_number(comp).chi;
    CHECK(static_cast<int>(clique.vertices.size()) >= (n + cover - 1) / cover);
  }
}

TEST_CASE("vsrc_exact on named families") {
  for (int n = 2; n <= 8; ++n) {
    auto res = vsrc_exact(generate({.family = Family::path, .n = n}));
    CHECK(res.k == n - 1);
  }
  CHECK(vsrc_exact(generate({.family = Family::cycle, .n = 6})).k == 3);
  CHECK(vsrc_exact(generate({.family = Family::cycle, .n = 5})).k == 3);
  CHECK(vsrc_exact(generate({.family = Family::complete, .n = 4})).k == 1);
  CHECK(vsrc_exact(generate({.family = Family::cycle, .n = 3})).k == 1);
}

TEST_CASE("vsrc_exact equals the enumeration-based oracle") {
  for (std::uint64_t seed = 400; seed <= 450; ++seed) {
    Graph g = random_pool_graph(seed, 7);
    CHECK(vsrc_exact(g).k == testing::brute_vsrc(g));
  }
}

TEST_CASE("vsrc_exact invariants") {
  for (std::uint64_t seed = 500; seed <= 560; ++seed) {
    Graph g = random_pool_graph(seed, 8);
    auto res = vsrc_exact(g);
    REQUIRE(res.exact);
    auto d = DistanceMatrix::bfs_all_pairs(g);
    int n = g.vertex_count(), m = g.edge_count();
    CHECK(res.k >= d.diameter());
    CHECK(res.k >= static_cast<int>(bridge_edges(g).size()));
    CHECK(res.k <= m);
    CHECK(res.k <= n * n / 4);
    CHECK(verify_coloring(g, res.coloring).valid);
    // Canonical classes: first occurrences appear in increasing order.
    int seen = 0;
    for (int e = 0; e < m; ++e) {
      if (res.coloring.color[e] == seen) ++seen;
      CHECK(res.coloring.color[e] <= seen);
    }
  }
}

TEST_CASE("decide_vsrc2") {
  CHECK(decide_vsrc2(generate({.family = Family::cycle, .n = 4})));
  CHECK(!decide_vsrc2(generate({.family = Family::path, .n = 4})));
  CHECK(decide_vsrc2(generate({.family = Family::cycle, .n = 3})));

  for (std::uint64_t seed = 600; seed <= 680; ++seed) {
    Graph g = random_pool_graph(seed, 8);
    CHECK(decide_vsrc2(g) == (vsrc_exact(g).k <= 2));
  }
}

TEST_CASE("budget exhaustion reports bounds") {
  // A graph hard enough that two nodes are not enough.
  auto g = random_pool_graph(42, 9);
  auto cg_adj = adjacency_of(g);
  auto r = chromatic_number(cg_adj, {2});
  if (!r.exact) {
    CHECK(r.lower >= 1);
    CHECK(r.upper >= r.lower);
    CHECK(!r.witness.empty());
  }
}

TEST_CASE("twbound consistency") {
  CHECK(check_twbound_consistency(generate({.family = Family::complete, .n = 4}), 1, 4));
  CHECK(check_twbound_consistency(generate({.family = Family::path, .n = 5}), 4, 2));
  for (std::uint64_t seed = 700; seed <= 712; ++seed) {
    Graph g = random_cactus_bounded(seed, 12);
    auto res = vsrc_exact(g);
    AdjList adj(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    auto clique = max_clique(adj);
    REQUIRE(clique.exact);
    CHECK(check_twbound_consistency(g, res.k, static_cast<int>(clique.vertices.size())));
  }
}
