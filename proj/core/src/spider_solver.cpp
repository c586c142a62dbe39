#include "conset/spider_solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "conset/blocks.hpp"
#include "conset/classify.hpp"
#include "conset/path_solver.hpp"

namespace conset {

namespace {

std::optional<SolveResult> leg_solve(const ColoredGraph& g, const std::vector<int>& verts,
                                     int radius) {
  std::vector<int> colors(verts.size());
  for (size_t q = 0; q < verts.size(); ++q) colors[q] = g.color(verts[q]);
  PathOptions opt;
  opt.first_forced = true;
  opt.first_cover_radius = radius;
  auto r = path_mscs_core(colors, opt);
  if (!r) return std::nullopt;
  std::vector<int> witness;
  for (int q : r->witness) witness.push_back(verts[q]);
  std::sort(witness.begin(), witness.end());
  return SolveResult{witness};
}

}  // namespace

SolveResult solve_mscs_spider(const ColoredGraph& g) {
  auto sp = spider_structure(g);
  if (!sp) throw std::invalid_argument("solver requires a spider graph");
  if (g.num_colors() == 1) return SolveResult{{0}};

  BlockDecomposition blocks = decompose_blocks(g);
  const std::vector<int>& B = blocks.members[blocks.block_of[sp->center]];

  std::vector<int> leg_of(g.n(), -1), depth(g.n(), 0);
  for (size_t l = 0; l < sp->legs.size(); ++l)
    for (size_t p = 0; p < sp->legs[l].size(); ++p) {
      leg_of[sp->legs[l][p]] = static_cast<int>(l);
      depth[sp->legs[l][p]] = static_cast<int>(p) + 1;
    }

  // Each candidate b in the center's block plays the solution vertex
  // nearest to the center; every strict consistent subset has exactly such
  // a vertex, and it always lies in this block.
  std::optional<SolveResult> best;
  for (int b : B) {
    int t = depth[b];  // 0 for the center itself
    std::set<int> witness;
    int size = 1;
    bool ok = true;
    for (size_t l = 0; l < sp->legs.size() && ok; ++l) {
      std::vector<int> verts;
      int radius;
      if (b != sp->center && static_cast<int>(l) == leg_of[b]) {
        // b's own leg, from b downward only; the stretch above b belongs
        // to every other leg's instance.
        verts.assign(sp->legs[l].begin() + (t - 1), sp->legs[l].end());
        radius = 0;
      } else {
        for (int p = t - 1; p >= 0; --p) verts.push_back(sp->legs[leg_of[b]][p]);
        verts.push_back(sp->center);
        verts.insert(verts.end(), sp->legs[l].begin(), sp->legs[l].end());
        radius = t;
      }
      auto r = leg_solve(g, verts, radius);
      if (!r) {
        ok = false;
        break;
      }
      size += r->size() - 1;
      witness.insert(r->witness.begin(), r->witness.end());
    }
    if (!ok) continue;
    if (static_cast<int>(witness.size()) != size)
      throw std::logic_error("leg solutions may only share the anchor vertex");
    SolveResult cand{std::vector<int>(witness.begin(), witness.end())};
    if (!best || cand.better_than(*best)) best = std::move(cand);
  }
  if (!best) throw std::logic_error("the center itself is always a feasible anchor");
  return *best;
}

}  // namespace conset
