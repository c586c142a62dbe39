#include "conset/consistency.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "conset/blocks.hpp"
#include "conset/distance.hpp"

namespace conset {

namespace {

constexpr int kMixed = -2;
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Multi-source shortest distances to `sources`, tracking for each vertex
// whether all nearest sources agree on one color (kMixed otherwise).
// Correct because contributors to a vertex always settle strictly earlier:
// BFS pops whole layers in order, Dijkstra has positive weights.
struct SourceSweep {
  std::vector<std::int64_t> dist;
  std::vector<int> col;
};

SourceSweep sweep(const ColoredGraph& g, const std::vector<int>& sources,
                  const std::vector<int>& source_colors) {
  SourceSweep s;
  s.dist.assign(g.n(), kInf);
  s.col.assign(g.n(), -1);
  if (!g.weighted()) {
    std::deque<int> q;
    for (size_t i = 0; i < sources.size(); ++i) {
      int v = sources[i];
      if (s.dist[v] == 0 && s.col[v] != source_colors[i]) s.col[v] = kMixed;
      if (s.dist[v] == kInf) {
        s.dist[v] = 0;
        s.col[v] = source_colors[i];
        q.push_back(v);
      }
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [u, w] : g.adj(v)) {
        std::int64_t nd = s.dist[v] + 1;
        if (s.dist[u] == kInf) {
          s.dist[u] = nd;
          s.col[u] = s.col[v];
          q.push_back(u);
        } else if (s.dist[u] == nd && s.col[u] != s.col[v]) {
          s.col[u] = kMixed;
        }
      }
    }
  } else {
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (size_t i = 0; i < sources.size(); ++i) {
      int v = sources[i];
      if (s.dist[v] == 0 && s.col[v] != source_colors[i]) s.col[v] = kMixed;
      if (s.dist[v] == kInf) {
        s.dist[v] = 0;
        s.col[v] = source_colors[i];
        pq.push({0, v});
      }
    }
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != s.dist[v]) continue;
      for (auto [u, w] : g.adj(v)) {
        std::int64_t nd = d + w;
        if (nd < s.dist[u]) {
          s.dist[u] = nd;
          s.col[u] = s.col[v];
          pq.push({nd, u});
        } else if (nd == s.dist[u] && s.col[u] != s.col[v]) {
          s.col[u] = kMixed;
        }
      }
    }
  }
  return s;
}

std::vector<int> exact_nearest(const ColoredGraph& g, int v, const std::vector<int>& S) {
  DistRow row = shortest_from(g, v);
  std::int64_t best = kInf;
  for (int s : S)
    if (row.dist[s] != kUnreachable) best = std::min(best, row.dist[s]);
  std::vector<int> out;
  for (int s : S)
    if (row.dist[s] == best) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VerifyReport verify_set(const ColoredGraph& g, const std::vector<int>& S, Rule rule) {
  if (S.empty()) throw std::invalid_argument("verify_set: empty set");
  std::vector<char> in_set(g.n(), 0);
  for (int v : S) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("verify_set: vertex out of range");
    if (in_set[v]) throw std::invalid_argument("verify_set: duplicate vertex in set");
    in_set[v] = 1;
  }

  VerifyReport rep;
  std::vector<int> bad;

  if (rule == Rule::Strict) {
    std::vector<int> cols;
    cols.reserve(S.size());
    for (int v : S) cols.push_back(g.color(v));
    SourceSweep s = sweep(g, S, cols);
    for (int v = 0; v < g.n(); ++v)
      if (s.dist[v] == kInf || s.col[v] == kMixed || s.col[v] != g.color(v)) bad.push_back(v);
  } else {
    // Consistent: some nearest member shares the vertex's color, i.e. the
    // per-color distance matches the overall distance.
    std::map<int, std::vector<int>> by_color;
    for (int v : S) by_color[g.color(v)].push_back(v);
    std::vector<std::int64_t> overall(g.n(), kInf);
    std::map<int, SourceSweep> per_color;
    for (auto& [c, members] : by_color) {
      std::vector<int> cols(members.size(), c);
      per_color[c] = sweep(g, members, cols);
      for (int v = 0; v < g.n(); ++v) overall[v] = std::min(overall[v], per_color[c].dist[v]);
    }
    for (int v = 0; v < g.n(); ++v) {
      auto it = per_color.find(g.color(v));
      bool ok = overall[v] != kInf && it != per_color.end() && it->second.dist[v] == overall[v];
      if (!ok) bad.push_back(v);
    }
  }

  for (int v : bad) {
    Violation viol;
    viol.vertex = v;
    viol.nearest = exact_nearest(g, v, S);
    if (viol.nearest.empty()) {
      viol.reason = "no set member reachable";
    } else if (rule == Rule::Strict) {
      viol.reason = "a nearest set member has a different color";
    } else {
      viol.reason = "no nearest set member shares the vertex color";
    }
    rep.violations.push_back(std::move(viol));
  }

  if (rule == Rule::CoveringConsistent) {
    BlockDecomposition d = decompose_blocks(g);
    std::vector<char> hit(d.members.size(), 0);
    for (int v : S) hit[d.block_of[v]] = 1;
    for (int b = 0; b < static_cast<int>(d.members.size()); ++b)
      if (!hit[b]) rep.missed_blocks.push_back(b);
  }

  rep.ok = rep.violations.empty() && rep.missed_blocks.empty();
  return rep;
}

}  // namespace conset
