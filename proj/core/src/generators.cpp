#include "conset/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace conset {

int Rng::below(int n) {
  if (n <= 0) throw std::invalid_argument("range must be positive");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t reject_below = (-un) % un;  // 2^64 mod n
  std::uint64_t x = next();
  while (x < reject_below) x = next();
  return static_cast<int>(x % un);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation size must match the vertex count");
  std::vector<int> colors(g.n());
  for (int v = 0; v < g.n(); ++v) colors[perm[v]] = g.color(v);
  ColoredGraph h(g.n(), colors, g.weighted());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v], e.w);
  h.validate();
  return h;
}

namespace {

std::vector<int> random_colors(Rng& rng, int n, int num_colors) {
  if (num_colors < 1) throw std::invalid_argument("need at least one color");
  std::vector<int> c(n);
  for (int& x : c) x = rng.below(num_colors);
  return c;
}

}  // namespace

ColoredGraph random_path(Rng& rng, int n, int num_colors) {
  ColoredGraph g(n, random_colors(rng, n, num_colors));
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.validate();
  return g;
}

ColoredGraph random_cycle(Rng& rng, int n, int num_colors) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  ColoredGraph g(n, random_colors(rng, n, num_colors));
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  g.validate();
  return g;
}

ColoredGraph random_tree(Rng& rng, int n, int num_colors) {
  ColoredGraph g(n, random_colors(rng, n, num_colors));
  for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
  g.validate();
  return g;
}

ColoredGraph random_spider(Rng& rng, int n, int num_colors, int legs) {
  if (n < 4) throw std::invalid_argument("a spider needs at least four vertices");
  if (legs == -1) legs = rng.range(3, std::min(n - 1, 6));
  if (legs < 3 || legs > n - 1)
    throw std::invalid_argument("leg count must lie in [3, n-1]");
  std::vector<int> leg_len(legs, 1);
  for (int extra = n - 1 - legs; extra > 0; --extra) ++leg_len[rng.below(legs)];
  ColoredGraph g(n, random_colors(rng, n, num_colors));
  int next_id = 1;  // center is 0, legs take consecutive ids outward
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int d = 0; d < leg_len[l]; ++d) {
      g.add_edge(prev, next_id);
      prev = next_id++;
    }
  }
  g.validate();
  return g;
}

ColoredGraph random_comb(Rng& rng, int n, int num_colors, int min_teeth) {
  if (min_teeth == -1) min_teeth = 2;
  int spine_min = std::max(4, min_teeth + 2);
  if (min_teeth < 1 || n < spine_min + min_teeth)
    throw std::invalid_argument("too few vertices for the requested comb");
  int spine = rng.range(spine_min, n - min_teeth);
  std::vector<int> tooth_len(spine, 0);
  // a random choice of min_teeth distinct interior columns is guaranteed a tooth
  std::vector<int> interior(spine - 2);
  for (int s = 0; s < spine - 2; ++s) interior[s] = s + 1;
  for (int i = 0; i < min_teeth; ++i) {
    std::swap(interior[i], interior[i + rng.below(spine - 2 - i)]);
    ++tooth_len[interior[i]];
  }
  for (int extra = n - spine - min_teeth; extra > 0; --extra)
    ++tooth_len[rng.range(1, spine - 2)];
  ColoredGraph g(n, random_colors(rng, n, num_colors));
  for (int s = 0; s + 1 < spine; ++s) g.add_edge(s, s + 1);
  int next_id = spine;
  for (int s = 1; s + 1 < spine; ++s) {
    int prev = s;
    for (int d = 0; d < tooth_len[s]; ++d) {
      g.add_edge(prev, next_id);
      prev = next_id++;
    }
  }
  g.validate();
  return g;
}

ColoredGraph random_connected(Rng& rng, int n, int num_colors, int extra_edges) {
  ColoredGraph tree = random_tree(rng, n, num_colors);
  std::set<std::pair<int, int>> have;
  for (const Edge& e : tree.edges()) have.insert(std::minmax(e.u, e.v));
  ColoredGraph g(n, tree.colors());
  for (const Edge& e : tree.edges()) g.add_edge(e.u, e.v);
  long long room = static_cast<long long>(n) * (n - 1) / 2 - static_cast<long long>(have.size());
  for (int added = 0, tries = 0; added < extra_edges && tries < 20 * extra_edges + 50 && room > 0;
       ++tries) {
    int u = rng.below(n), v = rng.below(n);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!have.insert(key).second) continue;
    g.add_edge(key.first, key.second);
    ++added;
    --room;
  }
  g.validate();
  return g;
}

ColoredGraph with_random_weights(Rng& rng, const ColoredGraph& g, std::int64_t wmin,
                                 std::int64_t wmax) {
  if (wmin < 1 || wmax < wmin) throw std::invalid_argument("weight range must be positive");
  ColoredGraph h(g.n(), g.colors(), true);
  for (const Edge& e : g.edges())
    h.add_edge(e.u, e.v, wmin + rng.below(static_cast<int>(wmax - wmin + 1)));
  h.validate();
  return h;
}

}  // namespace conset
