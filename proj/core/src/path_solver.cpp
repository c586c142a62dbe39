#include "conset/path_solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "conset/blocks.hpp"
#include "conset/classify.hpp"

namespace conset {

OverlayGraph build_overlay(const std::vector<int>& colors) {
  if (colors.empty()) throw std::invalid_argument("empty path");
  int n = static_cast<int>(colors.size());
  OverlayGraph h;
  h.num_positions = n;
  h.block_of_pos.assign(n, 0);
  for (int i = 1; i < n; ++i)
    h.block_of_pos[i] = h.block_of_pos[i - 1] + (colors[i] != colors[i - 1] ? 1 : 0);
  h.num_blocks = h.block_of_pos[n - 1] + 1;
  h.block_start.assign(h.num_blocks, n);
  h.block_end.assign(h.num_blocks, -1);
  for (int i = 0; i < n; ++i) {
    int b = h.block_of_pos[i];
    h.block_start[b] = std::min(h.block_start[b], i);
    h.block_end[b] = std::max(h.block_end[b], i);
  }
  h.partner.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int b = h.block_of_pos[i];
    if (b + 1 >= h.num_blocks) continue;
    // The unique pick in the next block that keeps both sides of the block
    // boundary strictly served: mirror i across the boundary.
    int a = h.block_end[b];
    int k = 2 * a + 1 - i;
    if (k <= h.block_end[b + 1]) {
      h.partner[i] = k;
      h.type1.push_back({i, k, 0});
    }
  }
  for (int i = 0; i < n; ++i) {
    int b = h.block_of_pos[i];
    int dummy = n + b;
    int w = (b == 0 || b == h.num_blocks - 1) ? 0 : 1;
    h.type2.push_back({i, dummy, w});
    h.type2.push_back({dummy, i, w});
  }
  return h;
}

std::optional<SolveResult> path_mscs_core(const std::vector<int>& colors,
                                          const PathOptions& opt) {
  int n = static_cast<int>(colors.size());
  if (n == 0) throw std::invalid_argument("empty path");
  if (opt.first_cover_radius < 0 || opt.first_cover_radius >= n)
    throw std::invalid_argument("cover radius out of range");
  if (!opt.first_forced && opt.first_cover_radius != 0)
    throw std::invalid_argument("cover radius needs a forced first pick");

  OverlayGraph h = build_overlay(colors);
  if (opt.first_forced && h.block_of_pos[opt.first_cover_radius] != 0)
    return std::nullopt;  // the forced pick cannot serve its whole prefix

  const int kInf = std::numeric_limits<int>::max() / 2;
  // cost1: position picked first within its block; cost2: picked second.
  std::vector<int> cost1(n, kInf), cost2(n, kInf);
  std::vector<int> par1(n, -1), par2(n, -1);
  std::vector<char> par1_kind(n, 1);  // which table the predecessor lives in

  int window = opt.first_forced ? std::max(2 * opt.first_cover_radius, 1) : 1;
  int acc_cost = kInf, acc_pos = -1;  // prefix-min of cost1 in current block
  for (int m = 0; m < n; ++m) {
    int b = h.block_of_pos[m];
    if (m == h.block_start[b]) {
      acc_cost = kInf;
      acc_pos = -1;
    }
    if (b == 0) {
      if (!opt.first_forced || m == 0) cost1[m] = 1;
    } else {
      int i = 2 * h.block_end[b - 1] + 1 - m;  // tail of the type-1 arc into m
      if (i >= h.block_start[b - 1] && h.partner[i] == m) {
        int c1 = cost1[i], c2 = cost2[i];
        if (std::min(c1, c2) < kInf) {
          cost1[m] = std::min(c1, c2) + 1;
          par1[m] = i;
          par1_kind[m] = c1 <= c2 ? 1 : 2;
        }
      }
    }
    bool in_window = b != 0 || m >= window;
    if (in_window && acc_cost < kInf) {
      cost2[m] = acc_cost + 1;
      par2[m] = acc_pos;
    }
    if (cost1[m] < acc_cost) {
      acc_cost = cost1[m];
      acc_pos = m;
    }
  }

  int best_pos = -1, best_kind = 0, best_cost = kInf;
  auto consider = [&](int m, int kind, int c) {
    if (c < best_cost) {
      best_cost = c;
      best_pos = m;
      best_kind = kind;
    }
  };
  if (opt.last_forced) {
    consider(n - 1, 1, cost1[n - 1]);
    consider(n - 1, 2, cost2[n - 1]);
  } else {
    for (int m = h.block_start[h.num_blocks - 1]; m < n; ++m) {
      consider(m, 1, cost1[m]);
      consider(m, 2, cost2[m]);
    }
  }
  if (best_cost >= kInf) return std::nullopt;

  std::vector<int> picks;
  int m = best_pos, kind = best_kind;
  while (m != -1) {
    picks.push_back(m);
    if (kind == 2) {
      m = par2[m];
      kind = 1;
    } else {
      int p = par1[m];
      kind = par1_kind[m];
      m = p;
    }
  }
  std::reverse(picks.begin(), picks.end());
  if (static_cast<int>(picks.size()) != best_cost)
    throw std::logic_error("pick chain length disagrees with its cost");
  return SolveResult{picks};
}

SolveResult solve_mscs_path(const ColoredGraph& g) {
  auto order = path_structure(g);
  if (!order) throw std::invalid_argument("solver requires a path graph");
  std::vector<int> colors(g.n());
  for (int q = 0; q < g.n(); ++q) colors[q] = g.color((*order)[q]);
  auto r = path_mscs_core(colors);
  if (!r) throw std::logic_error("unconstrained path instance is always feasible");
  std::vector<int> witness;
  for (int q : r->witness) witness.push_back((*order)[q]);
  std::sort(witness.begin(), witness.end());
  return SolveResult{witness};
}

SolveResult solve_mscs_cycle(const ColoredGraph& g) {
  auto order = cycle_structure(g);
  if (!order) throw std::invalid_argument("solver requires a cycle graph");
  int n = g.n();
  if (g.num_colors() == 1) return SolveResult{{0}};

  std::vector<int> pos_of(n);
  for (int q = 0; q < n; ++q) pos_of[(*order)[q]] = q;

  BlockDecomposition blocks = decompose_blocks(g);
  int bmin = 0;
  for (int b = 1; b < static_cast<int>(blocks.members.size()); ++b)
    if (blocks.members[b].size() < blocks.members[bmin].size()) bmin = b;

  // Cutting at a solution vertex keeps every nearest-member set intact:
  // both arc distances around the cut survive via the two forced copies,
  // and no shortest route to a nearest member passes through another
  // member strictly.
  std::optional<SolveResult> best;
  PathOptions opt;
  opt.first_forced = true;
  opt.last_forced = true;
  for (int b : blocks.members[bmin]) {
    int t = pos_of[b];
    std::vector<int> colors(n + 1);
    for (int q = 0; q <= n; ++q) colors[q] = g.color((*order)[(t + q) % n]);
    auto r = path_mscs_core(colors, opt);
    if (!r) continue;
    std::set<int> w;
    for (int q : r->witness) w.insert((*order)[(t + q) % n]);
    if (static_cast<int>(w.size()) != r->size() - 1)
      throw std::logic_error("cut endpoints must be the only duplicated pick");
    SolveResult cand{std::vector<int>(w.begin(), w.end())};
    if (!best || cand.better_than(*best)) best = std::move(cand);
  }
  if (!best) throw std::logic_error("some cut of the smallest block is always feasible");
  return *best;
}

}  // namespace conset
