#include "conset/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace conset {

std::string class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Path: return "path";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Spider: return "spider";
    case GraphClass::Comb: return "comb";
    case GraphClass::Tree: return "tree";
    case GraphClass::General: return "general";
  }
  return "general";
}

std::optional<GraphClass> class_from_name(const std::string& name) {
  if (name == "path") return GraphClass::Path;
  if (name == "cycle") return GraphClass::Cycle;
  if (name == "spider") return GraphClass::Spider;
  if (name == "comb") return GraphClass::Comb;
  if (name == "tree") return GraphClass::Tree;
  if (name == "general") return GraphClass::General;
  return std::nullopt;
}

bool is_tree(const ColoredGraph& g) {
  return static_cast<int>(g.edges().size()) == g.n() - 1 && g.is_connected();
}

std::optional<std::vector<int>> path_structure(const ColoredGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  if (g.n() == 1) return std::vector<int>{0};
  std::vector<int> ends;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<int> order{std::min(ends[0], ends[1])};
  int prev = -1;
  while (static_cast<int>(order.size()) < g.n()) {
    int cur = order.back();
    for (auto [u, w] : g.adj(cur)) {
      if (u != prev) {
        order.push_back(u);
        prev = cur;
        break;
      }
    }
  }
  return order;
}

std::optional<std::vector<int>> cycle_structure(const ColoredGraph& g) {
  if (g.n() < 3 || static_cast<int>(g.edges().size()) != g.n() || !g.is_connected())
    return std::nullopt;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<int> order{0};
  int second = std::min(g.adj(0)[0].first, g.adj(0)[1].first);
  order.push_back(second);
  int prev = 0;
  while (static_cast<int>(order.size()) < g.n()) {
    int cur = order.back();
    int next = g.adj(cur)[0].first == prev ? g.adj(cur)[1].first : g.adj(cur)[0].first;
    order.push_back(next);
    prev = cur;
  }
  return order;
}

std::optional<SpiderStructure> spider_structure(const ColoredGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  int center = -1;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= 3) {
      if (center != -1) return std::nullopt;
      center = v;
    }
  }
  if (center == -1) return std::nullopt;
  SpiderStructure s;
  s.center = center;
  std::vector<int> starts;
  for (auto [u, w] : g.adj(center)) starts.push_back(u);
  std::sort(starts.begin(), starts.end());
  for (int start : starts) {
    std::vector<int> leg{start};
    int prev = center;
    while (g.degree(leg.back()) == 2) {
      int cur = leg.back();
      int next = g.adj(cur)[0].first == prev ? g.adj(cur)[1].first : g.adj(cur)[0].first;
      leg.push_back(next);
      prev = cur;
    }
    s.legs.push_back(std::move(leg));
  }
  return s;
}

namespace {

// Walk a pendant subtree hanging at `start` (coming from `from`); succeeds
// iff it is a bare path entered at one of its ends.
std::optional<std::vector<int>> pendant_path(const ColoredGraph& g, int from, int start) {
  std::vector<int> path;
  int prev = from, cur = start;
  while (true) {
    path.push_back(cur);
    int next = -1;
    for (auto [u, w] : g.adj(cur)) {
      if (u == prev) continue;
      if (next != -1) return std::nullopt;  // branches: not a path
      next = u;
    }
    if (next == -1) return path;
    prev = cur;
    cur = next;
  }
}

std::optional<CombStructure> try_spine(const ColoredGraph& g, int a, int b) {
  // Unique a-b path in the tree, via parent pointers from a DFS.
  std::vector<int> parent(g.n(), -2);
  std::vector<int> stack{a};
  parent[a] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, w] : g.adj(v))
      if (parent[u] == -2) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  std::vector<int> spine;
  for (int v = b; v != -1; v = parent[v]) spine.push_back(v);
  std::reverse(spine.begin(), spine.end());

  std::vector<char> on_spine(g.n(), 0);
  for (int v : spine) on_spine[v] = 1;

  CombStructure c;
  c.spine = spine;
  c.teeth.resize(spine.size());
  for (size_t i = 0; i < spine.size(); ++i) {
    int v = spine[i];
    for (auto [u, w] : g.adj(v)) {
      if (on_spine[u]) continue;
      if (!c.teeth[i].empty()) return std::nullopt;  // two teeth at one spine vertex
      auto p = pendant_path(g, v, u);
      if (!p) return std::nullopt;
      c.teeth[i] = std::move(*p);
    }
  }
  return c;
}

}  // namespace

std::optional<CombStructure> comb_structure(const ColoredGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  if (g.n() == 1) {
    CombStructure c;
    c.spine = {0};
    c.teeth = {{}};
    return c;
  }
  std::vector<int> leaves;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 3) return std::nullopt;
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  // Any comb admits a spine whose ends are leaves (a spine ending in a
  // degree-2 vertex extends into that vertex's tooth). Leaf pairs are tried
  // in lexicographic order so the chosen decomposition is deterministic.
  for (size_t i = 0; i < leaves.size(); ++i)
    for (size_t j = i + 1; j < leaves.size(); ++j)
      if (auto c = try_spine(g, leaves[i], leaves[j])) return c;
  return std::nullopt;
}

GraphClass classify(const ColoredGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("classify: graph must be connected");
  if (path_structure(g)) return GraphClass::Path;
  if (cycle_structure(g)) return GraphClass::Cycle;
  if (spider_structure(g)) return GraphClass::Spider;
  if (comb_structure(g)) return GraphClass::Comb;
  if (is_tree(g)) return GraphClass::Tree;
  return GraphClass::General;
}

}  // namespace conset
