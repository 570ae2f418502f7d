#pragma once

#include <cstdint>
#include <string>

#include "vsrc/graph.hpp"

namespace vsrc {

// SplitMix64. Fixed here so that documented seeds reproduce the same graphs
// everywhere; bounded draws use next() % bound.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  random_cactus,
  random_interval,
  random_connected,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws ParseError

struct GenSpec {
  Family family = Family::path;
  int n = 0;           // path, cycle, star, complete, random_interval, random_connected
  int a = 0, b = 0;    // complete_bipartite
  int blocks = 0;      // random_cactus
  int max_len = 0;     // random_cactus: cycle lengths drawn from [3, max_len]
  double p = 0.0;      // random_connected edge probability
  std::uint64_t seed = 0;
};

// Connected simple graph of the requested family; identical specs give
// byte-identical graphs. Throws ParseError(bad_parameters) for sizes outside
// the documented ranges.
Graph generate(const GenSpec& spec);

EdgeList complement(const EdgeList& g);

// 3-colorability gadget: the hat graph of the complement. The output's very
// strong rainbow connection number is at most 3 exactly when the input is
// 3-colorable. The input need not be connected.
Graph reduce_3col(const EdgeList& g);

// Random graph whose edges only cross `classes` planted vertex classes, so it
// is `classes`-colorable by construction. May be disconnected.
EdgeList planted_3colorable(int n, double p, std::uint64_t seed, int classes = 3);

}  // namespace vsrc
