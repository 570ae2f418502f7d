#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsrc/exact.hpp"
#include "vsrc/graph.hpp"

namespace vsrc {

struct ExperimentRow {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct ExperimentResult {
  std::string suite;
  std::vector<ExperimentRow> rows;

  bool all_pass() const {
    for (const auto& row : rows) {
      if (!row.pass) return false;
    }
    return true;
  }
};

// Reference conflict relation computed purely by shortest-path enumeration:
// entry (e1, e2) is set when some enumerated shortest path contains both
// edges. Independent of the distance-based conflict test.
std::vector<std::vector<char>> conflict_matrix_by_enumeration(const Graph& g,
                                                              std::uint64_t cap = 1'000'000);

// Deterministic random cactus with edge count <= max_m (redraws with derived
// seeds until it fits).
Graph random_cactus_bounded(std::uint64_t seed, int max_m);

// Random connected graph with n in [2, max_n] and density drawn from the
// seed; the instance pool shared by the oracle suites.
Graph random_pool_graph(std::uint64_t seed, int max_n);

// Suite: optimal cactus coloring vs exact chromatic number of the conflict
// graph, both verified, on `count` random cacti.
ExperimentResult run_cactus_vs_exact(int count, std::uint64_t seed, int max_m,
                                     const SearchBudget& budget = {});

// Suite: distance-based conflict test vs path enumeration, all edge pairs, on
// `count` random connected graphs with at most max_n vertices.
ExperimentResult run_conflict_oracle(int count, std::uint64_t seed, int max_n);

// Suite: the 3-colorability gadget. Half the instances are planted
// 3-colorable, half contain a K4; checks vsrc(gadget) <= 3 exactly for the
// 3-colorable ones.
ExperimentResult run_reduction(int count, std::uint64_t seed, int max_n,
                               const SearchBudget& budget = {});

}  // namespace vsrc
