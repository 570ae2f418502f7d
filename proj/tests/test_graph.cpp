#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "vsrc/graph.hpp"
#include "vsrc/instances.hpp"

using namespace vsrc;

TEST_CASE("parse_graph basics") {
  auto p3 = parse_graph("0 1\n1 2\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.edge_id(1, 0) == 0);
  CHECK(p3.edge_id(2, 1) == 1);

  auto k3 = parse_graph("# a triangle\np 3 3\n0 1\n1 2\n2 0\n");
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(0, 2));

  SUBCASE("header whitespace and comments") {
    auto g = parse_graph("\n# comment\np 2 1\n0 1\n# trailing\n");
    CHECK(g.vertex_count() == 2);
  }
}

TEST_CASE("parse_graph error cases") {
  CHECK_THROWS_WITH_AS(parse_graph("0 0\n"), doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("0 1\n1 0\n"), doctest::Contains("duplicate edge"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("0 1\n2 3\n"), doctest::Contains("disconnected"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("0 x\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("p 2 5\n0 1\n"), doctest::Contains("header"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("p 2 1\n0 7\n"), doctest::Contains("label"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);

  // Line numbers name the offender.
  CHECK_THROWS_WITH_AS(parse_graph("0 1\n1 2\n2 2\n"), doctest::Contains("line 3"), ParseError);
}

TEST_CASE("distances") {
  auto p3 = parse_graph("0 1\n1 2\n");
  auto d3 = DistanceMatrix::bfs_all_pairs(p3);
  CHECK(d3(0, 2) == 2);
  CHECK(d3(2, 0) == 2);
  CHECK(d3(1, 1) == 0);
  CHECK(d3.diameter() == 2);

  auto c5 = generate({.family = Family::cycle, .n = 5});
  auto d5 = DistanceMatrix::bfs_all_pairs(c5);
  CHECK(d5(1, 4) == 2);  // around the short side

  auto k4 = generate({.family = Family::complete, .n = 4});
  auto dk = DistanceMatrix::bfs_all_pairs(k4);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) CHECK(dk(u, v) == (u == v ? 0 : 1));
  }
}

TEST_CASE("distance matrix properties on random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SplitMix64 rng(seed);
    auto g = generate({.family = Family::random_connected,
                       .n = 2 + static_cast<int>(rng.below(8)),
                       .p = rng.unit(),
                       .seed = rng.next()});
    auto d = DistanceMatrix::bfs_all_pairs(g);
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) >= 1) == (u != v));
        CHECK(d(u, v) <= n - 1);
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < n; ++w) {
          CHECK(d(u, w) <= d(u, v) + d(v, w));
        }
      }
    }
  }
}

TEST_CASE("blocks") {
  auto p4 = parse_graph("0 1\n1 2\n2 3\n");
  auto comps = biconnected_components(p4);
  CHECK(comps.size() == 3);
  for (const auto& c : comps) CHECK(c.edge_ids.size() == 1);

  auto c6 = generate({.family = Family::cycle, .n = 6});
  comps = biconnected_components(c6);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].edge_ids.size() == 6);

  // Two triangles sharing vertex 0.
  auto bowtie = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
  comps = biconnected_components(bowtie);
  CHECK(comps.size() == 2);
  for (const auto& c : comps) CHECK(c.edge_ids.size() == 3);
}

TEST_CASE("bridges agree with the deletion oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 rng(seed);
    auto g = generate({.family = Family::random_connected,
                       .n = 2 + static_cast<int>(rng.below(8)),
                       .p = rng.unit() * 0.7,
                       .seed = rng.next()});
    CHECK(bridge_edges(g) == testing::bridges_by_deletion(g));
  }
}

TEST_CASE("cactus decomposition") {
  SUBCASE("cycle with a pendant edge") {
    auto g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n2 5\n");
    auto check = cactus_decomposition(g);
    REQUIRE(check.ok());
    int cycles = 0, bridges = 0;
    for (const auto& b : check.decomposition->blocks) {
      if (b.kind == BlockKind::cycle) {
        ++cycles;
        CHECK(b.cycle_order.size() == 5);
      } else {
        ++bridges;
      }
    }
    CHECK(cycles == 1);
    CHECK(bridges == 1);
  }

  SUBCASE("K4 is not a cactus") {
    auto g = generate({.family = Family::complete, .n = 4});
    auto check = cactus_decomposition(g);
    CHECK(!check.ok());
    CHECK(check.witness_block.size() == 6);  // 4 vertices, 6 edges
  }

  SUBCASE("two cycles joined by a bridge") {
    auto g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n");
    auto check = cactus_decomposition(g);
    REQUIRE(check.ok());
    int cycles = 0, bridges = 0;
    for (const auto& b : check.decomposition->blocks) {
      (b.kind == BlockKind::cycle ? cycles : bridges)++;
    }
    CHECK(cycles == 2);
    CHECK(bridges == 1);
  }

  SUBCASE("every edge in exactly one block") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto g = generate(
          {.family = Family::random_cactus, .blocks = 4, .max_len = 7, .seed = seed});
      auto check = cactus_decomposition(g);
      REQUIRE(check.ok());
      std::vector<int> count(g.edge_count(), 0);
      for (const auto& b : check.decomposition->blocks) {
        for (int e : b.edge_ids) count[e]++;
      }
      CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
    }
  }

  SUBCASE("cycle order is a closed walk") {
    auto g = generate({.family = Family::random_cactus, .blocks = 5, .max_len = 8, .seed = 3});
    auto check = cactus_decomposition(g);
    REQUIRE(check.ok());
    for (const auto& b : check.decomposition->blocks) {
      if (b.kind != BlockKind::cycle) continue;
      int len = static_cast<int>(b.cycle_order.size());
      CHECK(len == static_cast<int>(b.edge_ids.size()));
      for (int i = 0; i < len; ++i) {
        CHECK(g.has_edge(b.cycle_order[i], b.cycle_order[(i + 1) % len]));
      }
      // Deterministic start: smallest vertex first, toward its smaller neighbor.
      int lo = *std::min_element(b.cycle_order.begin(), b.cycle_order.end());
      CHECK(b.cycle_order.front() == lo);
      CHECK(b.cycle_order[1] < b.cycle_order.back());
    }
  }
}

TEST_CASE("cactus edge-count bound") {
  // Cacti satisfy m <= floor(3(n-1)/2), but the bound alone does not make a
  // cactus: two squares sharing an edge meet the count and still fail.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate({.family = Family::random_cactus, .blocks = 4, .max_len = 6, .seed = seed});
    CHECK(g.edge_count() <= 3 * (g.vertex_count() - 1) / 2);
  }
  auto shared_edge_squares = parse_graph("0 1\n1 2\n2 3\n3 0\n1 4\n4 5\n5 2\n");
  CHECK(shared_edge_squares.edge_count() <= 3 * (shared_edge_squares.vertex_count() - 1) / 2);
  CHECK(!cactus_decomposition(shared_edge_squares).ok());
}

TEST_CASE("bipartite check") {
  auto c4 = generate({.family = Family::cycle, .n = 4});
  CHECK(is_bipartite(c4).bipartite);

  auto p7 = generate({.family = Family::path, .n = 7});
  CHECK(is_bipartite(p7).bipartite);

  auto c5 = generate({.family = Family::cycle, .n = 5});
  auto check = is_bipartite(c5);
  CHECK(!check.bipartite);
  // Witness is a closed odd walk.
  REQUIRE(!check.odd_walk.empty());
  CHECK(check.odd_walk.front() == check.odd_walk.back());
  CHECK((check.odd_walk.size() - 1) % 2 == 1);
  for (size_t i = 0; i + 1 < check.odd_walk.size(); ++i) {
    CHECK(c5.has_edge(check.odd_walk[i], check.odd_walk[i + 1]));
  }
}

TEST_CASE("format round trip") {
  auto g = generate({.family = Family::random_cactus, .blocks = 3, .max_len = 5, .seed = 11});
  auto text = format_edge_list(g);
  auto back = parse_graph(text);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}
