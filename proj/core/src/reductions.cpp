#include "conset/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "conset/classify.hpp"
#include "conset/distance.hpp"

namespace conset {

ColoredGraph dominating_to_mcs(const ColoredGraph& g) {
  int n = g.n();
  std::vector<int> colors(n + 1, 0);
  colors[n] = 1;
  ColoredGraph h(n + 1, colors);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) h.add_edge(v, n);
  h.validate();
  return h;
}

ColoredGraph dominating_to_mscs(const ColoredGraph& g) {
  int n = g.n();
  std::vector<int> colors(2 * n + 1, 1);
  for (int v = 0; v < n; ++v) colors[v] = 0;
  ColoredGraph h(2 * n + 1, colors, true);
  for (const Edge& e : g.edges()) {
    h.add_edge(e.u, e.v, 2);
    h.add_edge(e.u + n, e.v + n, 2);
  }
  // Needs inside < cross + fresh <= 2 * inside. The right bound is what
  // forces domination: a first-copy vertex two hops from every picked
  // first-copy vertex ties with the fresh route (4 vs 3+1), and a tie mixes
  // colors, so it is not strictly covered. Cross weight 4 would break this
  // (ties become wins at two hops and single picks cover radius two).
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) h.add_edge(u, v + n, 3);
  for (int v = 0; v < n; ++v) h.add_edge(v + n, 2 * n, 1);
  h.validate();
  return h;
}

namespace {

int var_stride(int M) { return 8 + 2 * M; }

}  // namespace

int Max2SatTree::pos(int i, int a) const {
  return 3 + i * var_stride(anchors_per_side) + (a - 1);
}

int Max2SatTree::neg(int i, int a) const {
  return 3 + i * var_stride(anchors_per_side) + 4 + (a - 1);
}

int Max2SatTree::pos_anchor(int i, int j) const {
  return 3 + i * var_stride(anchors_per_side) + 8 + (j - 1);
}

int Max2SatTree::neg_anchor(int i, int j) const {
  return 3 + i * var_stride(anchors_per_side) + 8 + anchors_per_side + (j - 1);
}

int Max2SatTree::left(int c, int a) const {
  return 3 + formula.num_vars * var_stride(anchors_per_side) + c * 21 + (a - 1);
}

int Max2SatTree::right(int c, int a) const { return left(c, a) + 7; }

int Max2SatTree::clause(int c, int a) const { return left(c, a) + 14; }

int Max2SatTree::target_size(int k) const {
  int m = static_cast<int>(formula.clauses.size());
  return formula.num_vars * (anchors_per_side + 2) + 2 * k + 3 * (m - k) + 1;
}

std::vector<int> Max2SatTree::assignment_witness(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != formula.num_vars)
    throw std::invalid_argument("assignment length must match the variable count");
  std::vector<int> w;
  for (int i = 0; i < formula.num_vars; ++i) {
    if (assignment[i]) {
      for (int j = 1; j <= anchors_per_side; ++j) w.push_back(pos_anchor(i, j));
      w.push_back(pos(i, 2));
      w.push_back(neg(i, 4));
    } else {
      for (int j = 1; j <= anchors_per_side; ++j) w.push_back(neg_anchor(i, j));
      w.push_back(pos(i, 4));
      w.push_back(neg(i, 2));
    }
  }
  for (size_t c = 0; c < formula.clauses.size(); ++c) {
    auto [a, b] = formula.clauses[c];
    bool av = a > 0 ? assignment[a - 1] : !assignment[-a - 1];
    bool bv = b > 0 ? assignment[b - 1] : !assignment[-b - 1];
    int ci = static_cast<int>(c);
    if (av) {
      // first literal true: the far clause-path end plus the second
      // occurrence path's root
      w.push_back(clause(ci, 7));
      w.push_back(right(ci, 1));
    } else if (bv) {
      w.push_back(clause(ci, 1));
      w.push_back(left(ci, 1));
    } else {
      w.push_back(clause(ci, 1));
      w.push_back(left(ci, 1));
      w.push_back(right(ci, 7));
    }
  }
  w.push_back(hub(3));
  std::sort(w.begin(), w.end());
  return w;
}

Max2SatTree max2sat_to_tree(const Max2SatInstance& f, int anchors_per_side) {
  f.validate();
  for (auto [a, b] : f.clauses)
    if (std::abs(a) == std::abs(b))
      throw std::invalid_argument("clauses must mention two distinct variables");
  int n = f.num_vars;
  int m = static_cast<int>(f.clauses.size());
  int M = anchors_per_side == -1 ? 3 * (n + m) + 10 : anchors_per_side;
  if (M < 1) throw std::invalid_argument("need at least one anchor per side");

  Max2SatTree t;
  t.formula = f;
  t.anchors_per_side = M;

  int total = 3 + n * var_stride(M) + 21 * m;
  std::vector<int> colors(total, 0);
  // color ids: 0 central; 1+2i / 2+2i the two literal paths of variable i;
  // 1+2n+c clause path c; 1+2n+m+i*M+(j-1) anchor pair (i, j)
  auto pos_color = [](int i) { return 1 + 2 * i; };
  auto neg_color = [](int i) { return 2 + 2 * i; };
  auto clause_color = [n](int c) { return 1 + 2 * n + c; };
  auto anchor_color = [n, m, M](int i, int j) { return 1 + 2 * n + m + i * M + (j - 1); };
  auto literal_color = [&](int lit) {
    return lit > 0 ? pos_color(lit - 1) : neg_color(-lit - 1);
  };

  for (int j = 1; j <= 3; ++j) colors[t.hub(j)] = 0;
  for (int i = 0; i < n; ++i) {
    for (int a = 1; a <= 4; ++a) {
      colors[t.pos(i, a)] = pos_color(i);
      colors[t.neg(i, a)] = neg_color(i);
    }
    for (int j = 1; j <= M; ++j) {
      colors[t.pos_anchor(i, j)] = anchor_color(i, j);
      colors[t.neg_anchor(i, j)] = anchor_color(i, j);
    }
  }
  for (int c = 0; c < m; ++c) {
    for (int a = 1; a <= 7; ++a) {
      colors[t.left(c, a)] = literal_color(f.clauses[c].first);
      colors[t.right(c, a)] = literal_color(f.clauses[c].second);
      colors[t.clause(c, a)] = clause_color(c);
    }
  }

  ColoredGraph tree(total, colors);
  tree.add_edge(t.hub(1), t.hub(2));
  tree.add_edge(t.hub(2), t.hub(3));
  for (int i = 0; i < n; ++i) {
    for (int a = 1; a < 4; ++a) {
      tree.add_edge(t.pos(i, a), t.pos(i, a + 1));
      tree.add_edge(t.neg(i, a), t.neg(i, a + 1));
    }
    tree.add_edge(t.hub(1), t.pos(i, 1));
    tree.add_edge(t.hub(1), t.neg(i, 1));
    for (int j = 1; j <= M; ++j) {
      tree.add_edge(t.pos_anchor(i, j), t.pos(i, 1));
      tree.add_edge(t.neg_anchor(i, j), t.neg(i, 1));
    }
  }
  for (int c = 0; c < m; ++c) {
    for (int a = 1; a < 7; ++a) {
      tree.add_edge(t.left(c, a), t.left(c, a + 1));
      tree.add_edge(t.right(c, a), t.right(c, a + 1));
      tree.add_edge(t.clause(c, a), t.clause(c, a + 1));
    }
    tree.add_edge(t.left(c, 1), t.clause(c, 2));
    tree.add_edge(t.right(c, 1), t.clause(c, 6));
    tree.add_edge(t.hub(1), t.clause(c, 4));
  }
  tree.validate();
  t.tree = std::move(tree);
  return t;
}

std::string check_max2sat_tree(const Max2SatTree& t) {
  const ColoredGraph& g = t.tree;
  int n = t.formula.num_vars;
  int m = static_cast<int>(t.formula.clauses.size());
  int M = t.anchors_per_side;

  if (g.n() != 3 + n * var_stride(M) + 21 * m) return "wrong vertex count";
  if (!is_tree(g)) return "not a connected tree";

  // Color class sizes pin the whole palette: 3 central vertices, 7 per
  // clause path, 2 per anchor pair, and 4 + 7 * occurrences per literal.
  std::map<int, int> have;
  for (int v = 0; v < g.n(); ++v) ++have[g.color(v)];
  std::map<int, int> want;
  want[g.color(t.hub(1))] += 3;
  for (int i = 0; i < n; ++i) {
    want[g.color(t.pos(i, 1))] += 4;
    want[g.color(t.neg(i, 1))] += 4;
    for (int j = 1; j <= M; ++j) want[g.color(t.pos_anchor(i, j))] += 2;
  }
  for (int c = 0; c < m; ++c) {
    want[g.color(t.left(c, 1))] += 7;
    want[g.color(t.right(c, 1))] += 7;
    want[g.color(t.clause(c, 1))] += 7;
  }
  if (have != want) return "color class sizes do not match the formula";

  for (int i = 0; i < n; ++i) {
    if (g.color(t.pos(i, 1)) == g.color(t.neg(i, 1)))
      return "literal paths of one variable share a color";
    for (int j = 1; j <= M; ++j)
      if (g.color(t.pos_anchor(i, j)) != g.color(t.neg_anchor(i, j)))
        return "anchor pair split across colors";
  }

  DistRow from_hub = shortest_from(g, t.hub(1));
  for (int i = 0; i < n; ++i)
    if (from_hub.dist[t.pos(i, 1)] != 1 || from_hub.dist[t.neg(i, 1)] != 1)
      return "literal path detached from the hub";
  for (int c = 0; c < m; ++c) {
    if (from_hub.dist[t.clause(c, 4)] != 1) return "clause path detached from the hub";
    DistRow from_left = shortest_from(g, t.left(c, 1));
    if (from_left.dist[t.clause(c, 2)] != 1 || from_left.dist[t.clause(c, 7)] != 6)
      return "first occurrence path attached at the wrong spot";
    if (from_left.dist[t.right(c, 1)] != 6)
      return "occurrence paths at the wrong distance";
    if (g.color(t.left(c, 1)) !=
        g.color(t.formula.clauses[c].first > 0 ? t.pos(std::abs(t.formula.clauses[c].first) - 1, 1)
                                               : t.neg(std::abs(t.formula.clauses[c].first) - 1, 1)))
      return "first occurrence path colored unlike its literal";
    if (g.color(t.right(c, 1)) !=
        g.color(t.formula.clauses[c].second > 0
                    ? t.pos(std::abs(t.formula.clauses[c].second) - 1, 1)
                    : t.neg(std::abs(t.formula.clauses[c].second) - 1, 1)))
      return "second occurrence path colored unlike its literal";
  }
  return "";
}

CertifyReport certify_dominating_to_mcs(const ColoredGraph& g, int cap) {
  CertifyReport r;
  r.source_value = brute_dominating(g, cap).size();
  r.target_value = brute_mcs(dominating_to_mcs(g), cap).size();
  r.expected = r.source_value + 1;
  r.ok = r.target_value == r.expected;
  return r;
}

CertifyReport certify_dominating_to_mscs(const ColoredGraph& g, int cap) {
  CertifyReport r;
  r.source_value = brute_dominating(g, cap).size();
  r.target_value = brute_mscs(dominating_to_mscs(g), cap).size();
  r.expected = r.source_value + 1;
  r.ok = r.target_value == r.expected;
  return r;
}

}  // namespace conset
