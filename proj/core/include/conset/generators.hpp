#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conset/graph.hpp"

namespace conset {

// Deterministic pseudo-random stream. mt19937_64 output is pinned by the
// standard, and every derived draw below uses integer rejection sampling,
// so the same seed yields the same instances on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n), n >= 1
  int below(int n);

  // uniform in [lo, hi]
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // true with probability pct/100
  bool chance_percent(int pct) { return below(100) < pct; }

private:
  std::mt19937_64 eng_;
};

std::vector<int> random_permutation(Rng& rng, int n);

// Rebuilds the graph with vertex v renamed to perm[v].
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);

// All generators color vertices uniformly at random with colors drawn from
// {0..num_colors-1} and produce canonical labelings (paths in position
// order, spiders center-first, and so on); compose with relabel() and
// random_permutation() to exercise structure recovery.
ColoredGraph random_path(Rng& rng, int n, int num_colors);
ColoredGraph random_cycle(Rng& rng, int n, int num_colors);
ColoredGraph random_tree(Rng& rng, int n, int num_colors);

// legs == -1 draws a leg count from [3, min(n-1, 6)]; n >= legs + 1 >= 4.
ColoredGraph random_spider(Rng& rng, int n, int num_colors, int legs = -1);

// Spine of length >= 4 with at least min_teeth (default 2) nonempty
// interior teeth; needs n >= max(4, min_teeth + 2) + min_teeth.
ColoredGraph random_comb(Rng& rng, int n, int num_colors, int min_teeth = -1);

// Random tree plus up to extra_edges additional distinct edges (fewer when
// the graph saturates first).
ColoredGraph random_connected(Rng& rng, int n, int num_colors, int extra_edges);

// Copy with every edge weight redrawn uniformly from [wmin, wmax].
ColoredGraph with_random_weights(Rng& rng, const ColoredGraph& g, std::int64_t wmin,
                                 std::int64_t wmax);

}  // namespace conset
