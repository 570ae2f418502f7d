#include "vsrc/instances.hpp"

#include <algorithm>

namespace vsrc {

namespace {

ParseError bad(const std::string& why) {
  return ParseError(ParseError::Kind::bad_parameters, "bad generator parameters: " + why);
}

Graph make_path(int n) {
  if (n < 1) throw bad("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  if (n < 2) throw bad("star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw bad("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw bad("complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph make_random_cactus(int blocks, int max_len, std::uint64_t seed) {
  if (blocks < 1) throw bad("random_cactus needs blocks >= 1");
  if (max_len < 3) throw bad("random_cactus needs max_len >= 3");
  SplitMix64 rng(seed);
  int n = 1;
  std::vector<Edge> edges;
  for (int b = 0; b < blocks; ++b) {
    int attach = static_cast<int>(rng.below(n));
    bool is_bridge = rng.below(2) == 0;
    if (is_bridge) {
      edges.emplace_back(attach, n);
      n += 1;
    } else {
      int len = 3 + static_cast<int>(rng.below(max_len - 2));
      int first = n;
      edges.emplace_back(attach, first);
      for (int i = 0; i + 1 < len - 1; ++i) edges.emplace_back(first + i, first + i + 1);
      edges.emplace_back(std::min(attach, first + len - 2), std::max(attach, first + len - 2));
      n += len - 1;
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_random_interval(int n, std::uint64_t seed) {
  if (n < 1) throw bad("random_interval needs n >= 1");
  // Retries with derived seeds until the interval graph is connected.
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    SplitMix64 rng(SplitMix64(seed).next() ^ (attempt * 0xD1B54A32D192ED03ULL));
    std::vector<std::pair<int, int>> intervals;
    for (int i = 0; i < n; ++i) {
      int start = static_cast<int>(rng.below(4 * n));
      int len = 1 + static_cast<int>(rng.below(2 * n));
      intervals.emplace_back(start, start + len);
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (intervals[u].first <= intervals[v].second &&
            intervals[v].first <= intervals[u].second) {
          edges.emplace_back(u, v);
        }
      }
    }
    try {
      return Graph::from_edges(n, edges);
    } catch (const ParseError&) {
      continue;  // disconnected; redraw
    }
  }
  throw bad("random_interval failed to produce a connected graph");
}

Graph make_random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw bad("random_connected needs n >= 1");
  if (p < 0.0 || p > 1.0) throw bad("random_connected needs p in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  // Random attachment tree guarantees connectivity, then each remaining pair
  // appears independently with probability p.
  std::vector<char> tree(static_cast<size_t>(n) * n, 0);
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(v));
    edges.emplace_back(u, v);
    tree[static_cast<size_t>(u) * n + v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (tree[static_cast<size_t>(u) * n + v]) continue;
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::random_cactus: return "random_cactus";
    case Family::random_interval: return "random_interval";
    case Family::random_connected: return "random_connected";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::complete,
                   Family::complete_bipartite, Family::random_cactus, Family::random_interval,
                   Family::random_connected}) {
    if (family_name(f) == name) return f;
  }
  throw ParseError(ParseError::Kind::bad_parameters, "unknown family \"" + name + "\"");
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::path: return make_path(spec.n);
    case Family::cycle: return make_cycle(spec.n);
    case Family::star: return make_star(spec.n);
    case Family::complete: return make_complete(spec.n);
    case Family::complete_bipartite: return make_complete_bipartite(spec.a, spec.b);
    case Family::random_cactus: return make_random_cactus(spec.blocks, spec.max_len, spec.seed);
    case Family::random_interval: return make_random_interval(spec.n, spec.seed);
    case Family::random_connected: return make_random_connected(spec.n, spec.p, spec.seed);
  }
  throw bad("unknown family");
}

EdgeList complement(const EdgeList& g) {
  std::vector<std::vector<char>> adjacent(g.n, std::vector<char>(g.n, 0));
  for (const auto& [u, v] : g.edges) adjacent[u][v] = adjacent[v][u] = 1;
  EdgeList out;
  out.n = g.n;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!adjacent[u][v]) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

Graph reduce_3col(const EdgeList& g) {
  EdgeList comp = complement(g);
  std::vector<Edge> edges = comp.edges;
  for (int v = 0; v < g.n; ++v) edges.emplace_back(v, g.n);
  return Graph::from_edges(g.n + 1, edges);
}

EdgeList planted_3colorable(int n, double p, std::uint64_t seed, int classes) {
  if (n < 1) throw bad("planted_3colorable needs n >= 1");
  if (p < 0.0 || p > 1.0) throw bad("planted_3colorable needs p in [0, 1]");
  if (classes < 1 || classes > 3) throw bad("planted_3colorable needs 1 <= classes <= 3");
  SplitMix64 rng(seed);
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = static_cast<int>(rng.below(classes));
  EdgeList out;
  out.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (cls[u] != cls[v] && rng.unit() < p) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace vsrc
