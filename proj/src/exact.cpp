#include "vsrc/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace vsrc {

namespace {

std::vector<int> vertex_order_by_degree(const AdjList& adj) {
  std::vector<int> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[a].size() > adj[b].size();
  });
  return order;
}

std::vector<char> adjacency_matrix(const AdjList& adj) {
  size_t n = adj.size();
  std::vector<char> mat(n * n, 0);
  for (size_t v = 0; v < n; ++v) {
    for (int w : adj[v]) mat[v * n + w] = 1;
  }
  return mat;
}

std::vector<int> greedy_clique(const AdjList& adj, const std::vector<char>& mat) {
  int n = static_cast<int>(adj.size());
  auto order = vertex_order_by_degree(adj);
  std::vector<int> best;
  for (int seed : order) {
    std::vector<int> clique{seed};
    for (int u : order) {
      if (u == seed) continue;
      bool ok = true;
      for (int c : clique) {
        if (!mat[static_cast<size_t>(u) * n + c]) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(u);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Greedy DSATUR: repeatedly color the uncolored vertex seeing the most
// distinct neighbor colors, with the smallest feasible color.
std::pair<std::vector<int>, int> greedy_dsatur(const AdjList& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1), sat(n, 0);
  std::vector<std::vector<int>> nbr_count(n, std::vector<int>(n + 1, 0));
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v < 0 || sat[u] > sat[v] ||
          (sat[u] == sat[v] && adj[u].size() > adj[v].size())) {
        v = u;
      }
    }
    int c = 0;
    while (nbr_count[v][c] > 0) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
    for (int w : adj[v]) {
      if (color[w] < 0 && nbr_count[w][c]++ == 0) ++sat[w];
    }
  }
  return {color, used};
}

struct CliqueSearch {
  const AdjList& adj;
  const std::vector<char>& mat;
  int n;
  std::uint64_t nodes = 0, max_nodes;
  bool aborted = false;
  std::vector<int> best, current;

  CliqueSearch(const AdjList& a, const std::vector<char>& m, std::uint64_t cap)
      : adj(a), mat(m), n(static_cast<int>(a.size())), max_nodes(cap) {}

  bool adjacent(int u, int v) const { return mat[static_cast<size_t>(u) * n + v] != 0; }

  void expand(std::vector<int>& cand) {
    if (++nodes > max_nodes) {
      aborted = true;
      return;
    }
    if (current.size() > best.size()) best = current;
    if (cand.empty() || current.size() + cand.size() <= best.size()) return;

    // Pivot on the candidate covering most of the candidate set.
    int pivot = cand.front();
    size_t pivot_cover = 0;
    for (int p : cand) {
      size_t cover = 0;
      for (int u : cand) {
        if (adjacent(p, u)) ++cover;
      }
      if (cover > pivot_cover) {
        pivot = p;
        pivot_cover = cover;
      }
    }
    std::vector<int> branch;
    for (int u : cand) {
      if (u != pivot && !adjacent(pivot, u)) branch.push_back(u);
    }
    branch.push_back(pivot);

    for (int u : branch) {
      if (current.size() + cand.size() <= best.size()) return;
      std::vector<int> next;
      for (int w : cand) {
        if (adjacent(u, w)) next.push_back(w);
      }
      current.push_back(u);
      expand(next);
      current.pop_back();
      if (aborted) return;
      cand.erase(std::find(cand.begin(), cand.end(), u));
    }
  }
};

// DSATUR-ordered branch and bound. The greedy clique is pre-colored (any
// optimal coloring can be renamed to agree on a clique), and at each node
// only the already used colors plus one fresh color are tried.
struct ChromaticSearch {
  const AdjList& adj;
  int n;
  std::vector<int> color, sat;
  std::vector<std::vector<int>> nbr_count;
  std::vector<int> best;
  int best_k;
  std::uint64_t nodes = 0, max_nodes;
  bool aborted = false;

  ChromaticSearch(const AdjList& a, int ub, std::uint64_t cap)
      : adj(a),
        n(static_cast<int>(a.size())),
        color(n, -1),
        sat(n, 0),
        nbr_count(n, std::vector<int>(ub + 1, 0)),
        best_k(ub),
        max_nodes(cap) {}

  void assign(int v, int c) {
    color[v] = c;
    for (int w : adj[v]) {
      if (color[w] < 0 && nbr_count[w][c]++ == 0) ++sat[w];
    }
  }

  void unassign(int v, int c) {
    color[v] = -1;
    for (int w : adj[v]) {
      if (color[w] < 0 && --nbr_count[w][c] == 0) --sat[w];
    }
  }

  void dfs(int colored, int used) {
    if (aborted || used >= best_k) return;
    if (colored == n) {
      best_k = used;
      best = color;
      return;
    }
    if (++nodes > max_nodes) {
      aborted = true;
      return;
    }
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v < 0 || sat[u] > sat[v] ||
          (sat[u] == sat[v] && (adj[u].size() > adj[v].size()))) {
        v = u;
      }
    }
    for (int c = 0; c <= std::min(used, best_k - 2); ++c) {
      if (c < used && nbr_count[v][c] > 0) continue;
      assign(v, c);
      dfs(colored + 1, std::max(used, c + 1));
      unassign(v, c);
      if (aborted) return;
    }
  }
};

}  // namespace

CliqueResult max_clique(const AdjList& adj, const SearchBudget& budget) {
  if (adj.empty()) return {{}, true};
  auto mat = adjacency_matrix(adj);
  CliqueSearch search(adj, mat, budget.max_nodes);
  search.best = greedy_clique(adj, mat);
  std::vector<int> cand = vertex_order_by_degree(adj);
  search.expand(cand);
  std::sort(search.best.begin(), search.best.end());
  return {search.best, !search.aborted};
}

ChromaticResult chromatic_number(const AdjList& adj, const SearchBudget& budget) {
  ChromaticResult result;
  int n = static_cast<int>(adj.size());
  if (n == 0) return result;

  bool has_edge = false;
  for (const auto& ns : adj) {
    if (!ns.empty()) {
      has_edge = true;
      break;
    }
  }
  if (!has_edge) {
    result.chi = result.lower = result.upper = 1;
    result.witness.assign(n, 0);
    return result;
  }

  auto mat = adjacency_matrix(adj);
  auto clique = greedy_clique(adj, mat);
  auto [greedy, ub] = greedy_dsatur(adj);
  int lb = static_cast<int>(clique.size());

  // Counting bound: every color class is an independent set, so chi is at
  // least n divided by the independence number. Only usable when the
  // independence number is known exactly.
  if (lb < ub && n <= 512) {
    AdjList comp(n);
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) {
        if (w != u && !mat[static_cast<size_t>(u) * n + w]) comp[u].push_back(w);
      }
    }
    auto mis = max_clique(comp, {std::min<std::uint64_t>(budget.max_nodes, 200'000)});
    if (mis.exact && !mis.vertices.empty()) {
      int alpha = static_cast<int>(mis.vertices.size());
      lb = std::max(lb, (n + alpha - 1) / alpha);
    }
  }

  if (lb >= ub) {
    result.chi = result.lower = result.upper = ub;
    result.witness = greedy;
    return result;
  }

  ChromaticSearch search(adj, ub, budget.max_nodes);
  search.best = greedy;
  for (size_t i = 0; i < clique.size(); ++i) search.assign(clique[i], static_cast<int>(i));
  search.dfs(static_cast<int>(clique.size()), static_cast<int>(clique.size()));

  result.nodes = search.nodes;
  result.witness = search.best;
  if (search.aborted) {
    result.exact = false;
    result.chi = search.best_k;
    result.lower = lb;
    result.upper = search.best_k;
  } else {
    result.chi = result.lower = result.upper = search.best_k;
  }
  return result;
}

std::optional<bool> chromatic_decision_ie(const AdjList& adj, int k) {
  int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  if (k <= 0) return false;
  if (k >= n) return true;
  if (n > 24) return std::nullopt;

  std::vector<std::uint32_t> nb(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) nb[v] |= 1u << w;
  }

  // f[s] = number of independent subsets of s, empty set included.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint64_t> f(static_cast<size_t>(full) + 1);
  f[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    f[s] = f[rest] + f[rest & ~nb[v]];
  }

  // The alternating sum counts k-tuples of independent sets covering all
  // vertices; it is nonnegative and bounded by 2^(n + k*bits), so 128-bit
  // wraparound arithmetic is exact as long as that stays below 2^127.
  int bits = std::bit_width(f[full]);
  if (n + k * bits > 126) return std::nullopt;

  unsigned __int128 acc = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    unsigned __int128 term = 1;
    for (int i = 0; i < k; ++i) term *= f[s];
    if ((n - std::popcount(s)) & 1) {
      acc -= term;
    } else {
      acc += term;
    }
    if (s == full) break;
  }
  return acc != 0;
}

VsrcExact vsrc_exact(const Graph& g, const SearchBudget& budget) {
  auto cg = build_conflict_graph(g);
  auto cr = chromatic_number(cg.adj, budget);
  VsrcExact out;
  out.k = cr.chi;
  out.exact = cr.exact;
  out.nodes = cr.nodes;
  out.coloring = canonicalize_coloring({cr.chi, cr.witness});
  auto report = verify_coloring(g, out.coloring);
  if (!report.valid) {
    throw InternalError("vsrc_exact produced a coloring that fails verification");
  }
  return out;
}

bool decide_vsrc2(const Graph& g) {
  auto cg = build_conflict_graph(g);
  return is_bipartite_adjacency(cg.adj).bipartite;
}

bool check_twbound_consistency(const Graph& g, int k, int max_clique_size) {
  int n = g.vertex_count();
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));

  long long kt = static_cast<long long>(k) * max_clique_size;
  if (k == 0) return n <= 1 && maxdeg == 0;
  if (maxdeg > kt) return false;

  // n <= (k*t)^k, computed with overflow care.
  if (kt <= 1) return n <= 1;
  unsigned long long pw = 1;
  for (int i = 0; i < k; ++i) {
    if (pw >= static_cast<unsigned long long>(n)) return true;
    pw *= static_cast<unsigned long long>(kt);
  }
  return static_cast<unsigned long long>(n) <= pw;
}

}  // namespace vsrc
