#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vsrc/conflict.hpp"
#include "vsrc/graph.hpp"

namespace vsrc {

using AdjList = std::vector<std::vector<int>>;

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
};

struct ChromaticResult {
  int chi = 0;
  std::vector<int> witness;  // proper coloring with `chi` colors
  bool exact = true;         // false when the node budget ran out
  int lower = 0;             // best bounds known (lower == upper == chi when exact)
  int upper = 0;
  std::uint64_t nodes = 0;
};

// Exact chromatic number with a witness coloring.
//
// Engine: DSATUR-ordered branch and bound, seeded with a greedy clique lower
// bound, an independent-set counting bound, and a greedy DSATUR upper bound.
// Deterministic for a fixed budget. When the budget runs out, returns
// exact=false with the best bounds and the best proper coloring found.
ChromaticResult chromatic_number(const AdjList& adj, const SearchBudget& budget = {});

// Decision-only cross-check: is chi(adj) <= k? Counts coverings by k
// independent sets via inclusion-exclusion over subsets. Exact (128-bit
// accumulation); returns nullopt when n > 24 or the counts would overflow.
std::optional<bool> chromatic_decision_ie(const AdjList& adj, int k);

struct CliqueResult {
  std::vector<int> vertices;  // ascending
  bool exact = true;
};

// Maximum clique via branch and bound with pivoting, budgeted. When the
// budget runs out the clique found so far is returned with exact=false.
CliqueResult max_clique(const AdjList& adj, const SearchBudget& budget = {});

struct VsrcExact {
  int k = 0;
  Coloring coloring;
  bool exact = true;
  std::uint64_t nodes = 0;
};

// Exact very strong rainbow connection number: the chromatic number of the
// conflict graph, with the witness mapped back to an edge coloring. The
// returned coloring always verifies (it is a proper conflict-graph coloring
// even when the budget ran out, in which case k is only an upper bound).
VsrcExact vsrc_exact(const Graph& g, const SearchBudget& budget = {});

// Polynomial-time decision of "vsrc <= 2": the conflict graph is bipartite.
bool decide_vsrc2(const Graph& g);

// Consistency check for the structural bound linking vsrc, clique size and
// degree: Delta(g) <= k*t and n <= (k*t)^k with t instantiated as the clique
// number (every clique has size at most treewidth + 1).
bool check_twbound_consistency(const Graph& g, int k, int max_clique_size);

}  // namespace vsrc
