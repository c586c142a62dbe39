#include "conset/tree_solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "conset/blocks.hpp"
#include "conset/classify.hpp"
#include "conset/distance.hpp"

namespace conset {

namespace {

// Subproblem S(x, y): minimum strict consistent subset of the sub-instance
// path(x,y) + subtree_below(y), where x is a chosen solution vertex that
// must be a nearest member for every vertex strictly between x and y.
// Infeasible states are nullopt, never a sentinel size.
class TreeDp {
public:
  explicit TreeDp(const ColoredGraph& g) : g_(g), n_(g.n()) {
    dist_ = all_pairs(g);
    par_.assign(n_, {});
    for (int r = 0; r < n_; ++r) {
      par_[r].assign(n_, -1);
      std::vector<int> stack{r};
      std::vector<char> seen(n_, 0);
      seen[r] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, w] : g.adj(v))
          if (!seen[u]) {
            seen[u] = 1;
            par_[r][u] = v;
            stack.push_back(u);
          }
      }
    }
    memo_.assign(n_, std::vector<Cell>(n_));
  }

  const std::optional<SolveResult>& solve(int x, int y) {
    Cell& cell = memo_[x][y];
    if (cell.state == Cell::kDone) return cell.r;
    if (cell.state == Cell::kRunning)
      throw std::logic_error("cyclic subproblem; sub-universes must shrink");
    cell.state = Cell::kRunning;
    cell.r = compute(x, y);
    cell.state = Cell::kDone;
    return cell.r;
  }

private:
  struct Cell {
    enum State : char { kNew, kRunning, kDone };
    State state = kNew;
    std::optional<SolveResult> r;
  };

  // v lies in the subtree cut off below y (seen from u on the far side).
  bool below(int v, int u, int y) const {
    return dist_[v][u] == dist_[v][y] + dist_[u][y];
  }

  // Color pattern along path(x,z) that a consecutive solution pair (x,z)
  // forces: vertices strictly nearer x carry x's color, vertices strictly
  // nearer z carry z's color, and an equidistant vertex is only legal when
  // x, z and it share one color. Equality of d(z,x) and 2*d(u,x) is allowed
  // (the tie at u is then caught by the equidistance clause); requiring a
  // strict inequality there loses optimal solutions.
  bool pair_ok(int x, int z) const {
    for (int v = z;; v = par_[x][v]) {
      std::int64_t dx = dist_[x][v], dz = dist_[z][v];
      if (dx < dz) {
        if (g_.color(v) != g_.color(x)) return false;
      } else if (dx > dz) {
        if (g_.color(v) != g_.color(z)) return false;
      } else {
        if (g_.color(x) != g_.color(z) || g_.color(v) != g_.color(x)) return false;
      }
      if (v == x) return true;
    }
  }

  std::optional<SolveResult> compute(int x, int y) {
    int u = par_[x][y];
    // x must be a nearest member for everything from x up to u, so that
    // stretch has to carry x's color.
    for (int v = u; v != -1; v = par_[x][v]) {
      if (g_.color(v) != g_.color(x)) return std::nullopt;
      if (v == x) break;
    }

    bool mono = true;
    for (int v = 0; v < n_ && mono; ++v)
      if (below(v, u, y) && g_.color(v) != g_.color(x)) mono = false;
    if (mono) return SolveResult{{x}};

    std::optional<SolveResult> best;
    for (int z = 0; z < n_; ++z) {
      if (z == x || !below(z, u, y)) continue;
      if (dist_[z][x] < 2 * dist_[u][x]) continue;  // z may not undercut u
      if (!pair_ok(x, z)) continue;
      auto cand = assemble(x, y, u, z);
      if (cand && (!best || cand->better_than(*best))) best = std::move(cand);
    }
    return best;
  }

  // Cost of choosing z as the solution vertex nearest to x: {x,z} plus the
  // subsolutions hanging off path(y,z), each child attributed to whichever
  // of x, z is nearer (free choice at an equidistant path vertex).
  std::optional<SolveResult> assemble(int x, int y, int u, int z) {
    std::vector<int> path;
    for (int v = z; v != y; v = par_[x][v]) path.push_back(v);
    path.push_back(y);
    std::reverse(path.begin(), path.end());

    std::set<int> witness{x, z};
    int size = 2;
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      int prev = i == 0 ? u : path[i - 1];
      int next = i + 1 < path.size() ? path[i + 1] : -1;
      for (auto [c, w] : g_.adj(v)) {
        if (c == prev || c == next) continue;
        std::int64_t dx = dist_[x][v], dz = dist_[z][v];
        const std::optional<SolveResult>* sub;
        if (dx < dz) {
          sub = &solve(x, c);
        } else if (dx > dz) {
          sub = &solve(z, c);
        } else {
          const auto& sx = solve(x, c);
          const auto& sz = solve(z, c);
          sub = !sx || (sz && sz->better_than(*sx)) ? &sz : &sx;
        }
        if (!*sub) return std::nullopt;
        size += (*sub)->size() - 1;
        witness.insert((*sub)->witness.begin(), (*sub)->witness.end());
      }
    }
    if (static_cast<int>(witness.size()) != size)
      throw std::logic_error("subsolution witnesses overlap beyond their shared vertex");
    return SolveResult{std::vector<int>(witness.begin(), witness.end())};
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<std::int64_t>> dist_;
  std::vector<std::vector<int>> par_;  // par_[r][v]: parent of v rooted at r
  std::vector<std::vector<Cell>> memo_;
};

}  // namespace

SolveResult solve_mscs_tree(const ColoredGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("solver requires a connected tree");
  if (g.num_colors() == 1) return SolveResult{{0}};

  BlockDecomposition blocks = decompose_blocks(g);
  std::vector<int> leaves = leaf_blocks(blocks);
  int L = -1;
  for (int b : leaves) {
    if (L == -1 ||
        std::make_pair(blocks.members[b].size(), blocks.members[b][0]) <
            std::make_pair(blocks.members[L].size(), blocks.members[L][0]))
      L = b;
  }

  // The unique edge leaving the leaf block; its far endpoint roots the DP.
  int y_root = -1;
  for (const Edge& e : g.edges()) {
    bool iu = blocks.block_of[e.u] == L, iv = blocks.block_of[e.v] == L;
    if (iu != iv) {
      if (y_root != -1) throw std::logic_error("leaf block with two boundary edges");
      y_root = iu ? e.v : e.u;
    }
  }
  if (y_root == -1) throw std::logic_error("leaf block without boundary edge");

  TreeDp dp(g);
  std::optional<SolveResult> best;
  for (int x : blocks.members[L]) {
    const auto& r = dp.solve(x, y_root);
    if (r && (!best || r->better_than(*best))) best = r;
  }
  if (!best) throw std::logic_error("every anchor infeasible; full vertex set is a solution");
  return *best;
}

SolveResult solve_mscs_tree_weighted(const ColoredGraph& g) { return solve_mscs_tree(g); }

}  // namespace conset
