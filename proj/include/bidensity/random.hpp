#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bidensity/graph.hpp"

namespace bidensity {

/// Seeded generator for the randomized suites. Wraps mt19937_64 with
/// platform-independent derivations so a seed fully determines every suite.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform01() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling keeps the distribution exact and reproducible.
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

/// Erdős–Rényi G(n, p) sample: each of the C(n,2) pairs independently with
/// probability p, in fixed (u, v) order so the seed pins the graph.
inline Graph gnp(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace bidensity
