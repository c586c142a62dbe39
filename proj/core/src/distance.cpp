#include "conset/distance.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace conset {

namespace {

DistRow bfs_row(const ColoredGraph& g, int source) {
  DistRow r;
  r.dist.assign(g.n(), kUnreachable);
  r.parent.assign(g.n(), -1);
  std::deque<int> q{source};
  r.dist[source] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [u, w] : g.adj(v)) {
      if (r.dist[u] == kUnreachable) {
        r.dist[u] = r.dist[v] + 1;
        r.parent[u] = v;
        q.push_back(u);
      } else if (r.dist[u] == r.dist[v] + 1 && v < r.parent[u]) {
        r.parent[u] = v;  // keep the smallest-id predecessor
      }
    }
  }
  return r;
}

DistRow dijkstra_row(const ColoredGraph& g, int source) {
  DistRow r;
  r.dist.assign(g.n(), kUnreachable);
  r.parent.assign(g.n(), -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  r.dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != r.dist[v]) continue;
    for (auto [u, w] : g.adj(v)) {
      std::int64_t nd = d + w;
      if (r.dist[u] == kUnreachable || nd < r.dist[u]) {
        r.dist[u] = nd;
        r.parent[u] = v;
        pq.push({nd, u});
      } else if (nd == r.dist[u] && v < r.parent[u]) {
        r.parent[u] = v;
      }
    }
  }
  return r;
}

}  // namespace

DistRow shortest_from(const ColoredGraph& g, int source) {
  if (source < 0 || source >= g.n()) throw std::out_of_range("bad source vertex");
  return g.weighted() ? dijkstra_row(g, source) : bfs_row(g, source);
}

std::vector<std::vector<std::int64_t>> all_pairs(const ColoredGraph& g) {
  std::vector<std::vector<std::int64_t>> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = shortest_from(g, v).dist;
  return d;
}

std::vector<int> nearest_in_set(const std::vector<std::vector<std::int64_t>>& dist, int v,
                                const std::vector<int>& set) {
  if (set.empty()) throw std::invalid_argument("nearest_in_set: empty set");
  std::int64_t best = -1;
  for (int s : set) {
    std::int64_t d = dist[v][s];
    if (d == kUnreachable) continue;
    if (best == -1 || d < best) best = d;
  }
  if (best == -1) throw std::invalid_argument("nearest_in_set: set unreachable from v");
  std::vector<int> out;
  for (int s : set)
    if (dist[v][s] == best) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conset
