#include "conset/blocks.hpp"

#include <algorithm>
#include <set>

namespace conset {

BlockDecomposition decompose_blocks(const ColoredGraph& g) {
  BlockDecomposition d;
  d.block_of.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (d.block_of[v] != -1) continue;
    int id = static_cast<int>(d.members.size());
    d.members.emplace_back();
    d.block_color.push_back(g.color(v));
    std::vector<int> stack{v};
    d.block_of[v] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      d.members[id].push_back(x);
      for (auto [u, w] : g.adj(x)) {
        if (d.block_of[u] == -1 && g.color(u) == g.color(v)) {
          d.block_of[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(d.members[id].begin(), d.members[id].end());
  }
  int b = static_cast<int>(d.members.size());
  std::vector<std::set<int>> adj(b);
  for (const Edge& e : g.edges()) {
    int a = d.block_of[e.u], c = d.block_of[e.v];
    if (a != c) {
      adj[a].insert(c);
      adj[c].insert(a);
    }
  }
  d.block_adj.resize(b);
  for (int i = 0; i < b; ++i) d.block_adj[i].assign(adj[i].begin(), adj[i].end());
  return d;
}

std::vector<int> leaf_blocks(const BlockDecomposition& d) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(d.members.size()); ++i)
    if (d.block_adj[i].size() <= 1) out.push_back(i);
  return out;
}

}  // namespace conset
