#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "specham/graph.hpp"

namespace specham {

/// Deterministic helpers on top of mt19937_64; raw integer arithmetic only,
/// so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // true with probability per_million / 1e6
  bool chance(std::uint32_t per_million) { return next() % 1000000u < per_million; }

  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform_int(0, i))]);
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

inline Graph random_graph(Rng& rng, int n, std::uint32_t edge_per_million) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_per_million)) g.add_edge(u, v);
  return g;
}

}  // namespace specham
