#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "vsrc/cactus.hpp"
#include "vsrc/conflict.hpp"
#include "vsrc/experiments.hpp"
#include "vsrc/instances.hpp"

using namespace vsrc;

TEST_CASE("edges_conflict basics") {
  auto p3 = parse_graph("0 1\n1 2\n");
  auto d3 = DistanceMatrix::bfs_all_pairs(p3);
  CHECK(edges_conflict(p3, d3, 0, 1));  // endpoints at distance 2

  auto k3 = parse_graph("0 1\n1 2\n2 0\n");
  auto dk = DistanceMatrix::bfs_all_pairs(k3);
  CHECK(!edges_conflict(k3, dk, 0, 1));
  CHECK(!edges_conflict(k3, dk, 0, 2));
  CHECK(!edges_conflict(k3, dk, 1, 2));

  // C4: adjacent edges conflict, opposite edges do not.
  auto c4 = generate({.family = Family::cycle, .n = 4});
  auto d4 = DistanceMatrix::bfs_all_pairs(c4);
  auto check = cactus_decomposition(c4);
  auto cls = classify_edges(c4, *check.decomposition);
  for (int e1 = 0; e1 < 4; ++e1) {
    for (int e2 = e1 + 1; e2 < 4; ++e2) {
      bool opposite = cls.opposite_edge[e1] == e2;
      CHECK(edges_conflict(c4, d4, e1, e2) == !opposite);
    }
  }
}

TEST_CASE("conflict graph shapes") {
  SUBCASE("P4 gives a triangle") {
    auto g = generate({.family = Family::path, .n = 4});
    auto cg = build_conflict_graph(g);
    REQUIRE(cg.size() == 3);
    for (int e = 0; e < 3; ++e) CHECK(cg.adj[e].size() == 2);
  }

  SUBCASE("C5 gives a 5-cycle") {
    auto g = generate({.family = Family::cycle, .n = 5});
    auto cg = build_conflict_graph(g);
    REQUIRE(cg.size() == 5);
    for (int e = 0; e < 5; ++e) CHECK(cg.adj[e].size() == 2);
    // Connected single cycle: all vertices reachable.
    std::vector<char> seen(5, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int w : cg.adj[queue[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    CHECK(reached == 5);
  }

  SUBCASE("K4 has no conflicts") {
    auto g = generate({.family = Family::complete, .n = 4});
    auto cg = build_conflict_graph(g);
    for (int e = 0; e < cg.size(); ++e) CHECK(cg.adj[e].empty());
  }
}

TEST_CASE("conflict test agrees with path enumeration") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Graph g = random_pool_graph(seed, 7);
    auto d = DistanceMatrix::bfs_all_pairs(g);
    auto oracle = conflict_matrix_by_enumeration(g);
    for (int e1 = 0; e1 < g.edge_count(); ++e1) {
      for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
        CHECK(edges_conflict(g, d, e1, e2) == (oracle[e1][e2] != 0));
      }
    }
  }
}

TEST_CASE("bridges pairwise conflict") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = (seed % 2 == 0)
                  ? generate({.family = Family::random_cactus, .blocks = 4, .max_len = 6, .seed = seed})
                  : random_pool_graph(seed, 8);
    auto d = DistanceMatrix::bfs_all_pairs(g);
    auto bridges = bridge_edges(g);
    for (size_t a = 0; a < bridges.size(); ++a) {
      for (size_t b = a + 1; b < bridges.size(); ++b) {
        CHECK(edges_conflict(g, d, bridges[a], bridges[b]));
      }
    }
  }
}

TEST_CASE("even cycle conflicts sit exactly off the opposite pairing") {
  for (int len : {4, 6, 8, 10}) {
    auto g = generate({.family = Family::cycle, .n = len});
    auto d = DistanceMatrix::bfs_all_pairs(g);
    auto cls = classify_edges(g, *cactus_decomposition(g).decomposition);
    for (int e1 = 0; e1 < len; ++e1) {
      for (int e2 = e1 + 1; e2 < len; ++e2) {
        CHECK(edges_conflict(g, d, e1, e2) == (cls.opposite_edge[e1] != e2));
      }
    }
  }
  // Also inside a larger cactus: even cycle plus pendant edges.
  auto g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n2 6\n4 7\n");
  auto d = DistanceMatrix::bfs_all_pairs(g);
  auto cls = classify_edges(g, *cactus_decomposition(g).decomposition);
  for (int e1 = 0; e1 < 6; ++e1) {
    for (int e2 = e1 + 1; e2 < 6; ++e2) {
      CHECK(edges_conflict(g, d, e1, e2) == (cls.opposite_edge[e1] != e2));
    }
  }
}

TEST_CASE("verify_coloring") {
  SUBCASE("monochrome P3 fails with the witness path") {
    auto g = generate({.family = Family::path, .n = 3});
    auto report = verify_coloring(g, {1, {0, 0}});
    CHECK(!report.valid);
    REQUIRE(report.violation.has_value());
    CHECK(report.violation->path == std::vector<int>{0, 1, 2});
  }

  SUBCASE("C6 colored by opposite pairs is valid") {
    auto g = generate({.family = Family::cycle, .n = 6});
    auto cls = classify_edges(g, *cactus_decomposition(g).decomposition);
    Coloring c;
    c.color.assign(6, -1);
    for (int e = 0; e < 6; ++e) {
      if (c.color[e] < 0) c.color[e] = c.color[cls.opposite_edge[e]] = c.k++;
    }
    CHECK(verify_coloring(g, c).valid);
  }

  SUBCASE("monochrome K3 is valid") {
    auto g = generate({.family = Family::cycle, .n = 3});
    CHECK(verify_coloring(g, {1, {0, 0, 0}}).valid);
  }

  SUBCASE("incomplete coloring is rejected") {
    auto g = generate({.family = Family::path, .n = 3});
    CHECK_THROWS_AS(verify_coloring(g, {1, {0}}), ParseError);
    CHECK_THROWS_AS(verify_coloring(g, {1, {0, 3}}), ParseError);
  }

  SUBCASE("agrees with proper-coloring of the conflict relation") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      Graph g = random_pool_graph(seed, 7);
      SplitMix64 rng(seed * 77);
      int k = 1 + static_cast<int>(rng.below(std::max(1, g.edge_count())));
      Coloring c;
      c.k = k;
      for (int e = 0; e < g.edge_count(); ++e) {
        c.color.push_back(static_cast<int>(rng.below(k)));
      }
      // Patch k to the distinct count so the coloring is well-formed.
      std::vector<char> used(k, 0);
      for (int col : c.color) used[col] = 1;
      std::vector<int> remap(k, -1);
      int distinct = 0;
      for (int col = 0; col < k; ++col) {
        if (used[col]) remap[col] = distinct++;
      }
      for (int& col : c.color) col = remap[col];
      c.k = distinct;

      auto report = verify_coloring(g, c);
      CHECK(report.valid == testing::brute_coloring_valid(g, c.color));
      if (!report.valid) {
        // Witness path must be a real shortest path carrying both edges.
        const auto& viol = *report.violation;
        auto d = DistanceMatrix::bfs_all_pairs(g);
        CHECK(static_cast<int>(viol.path.size()) - 1 ==
              d(viol.path.front(), viol.path.back()));
        CHECK(c.color[viol.edge1] == c.color[viol.edge2]);
        int found = 0;
        for (size_t i = 0; i + 1 < viol.path.size(); ++i) {
          int e = g.edge_id(viol.path[i], viol.path[i + 1]);
          CHECK(e >= 0);
          if (e == viol.edge1 || e == viol.edge2) ++found;
        }
        CHECK(found == 2);
      }
    }
  }
}

TEST_CASE("enumerate_shortest_paths") {
  auto c4 = generate({.family = Family::cycle, .n = 4});
  auto paths = enumerate_shortest_paths(c4, 0, 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == std::vector<int>{0, 1, 2});
  CHECK(paths[1] == std::vector<int>{0, 3, 2});

  auto p5 = generate({.family = Family::path, .n = 5});
  CHECK(enumerate_shortest_paths(p5, 0, 4).size() == 1);

  auto k4 = generate({.family = Family::complete, .n = 4});
  for (int t = 1; t < 4; ++t) {
    auto ps = enumerate_shortest_paths(k4, 0, t);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].size() == 2);
  }

  // The cap refuses instead of truncating.
  auto k23 = generate({.family = Family::complete_bipartite, .a = 2, .b = 3});
  CHECK_THROWS_AS(enumerate_shortest_paths(k23, 0, 1, 2), BudgetError);
}

TEST_CASE("canonicalize_coloring orders classes by first edge") {
  Coloring c{3, {2, 0, 2, 1}};
  auto canon = canonicalize_coloring(c);
  CHECK(canon.k == 3);
  CHECK(canon.color == std::vector<int>{0, 1, 0, 2});
}
