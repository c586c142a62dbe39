#include "conset/comb_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "conset/blocks.hpp"
#include "conset/distance.hpp"
#include "conset/path_solver.hpp"

namespace conset {

namespace {

std::vector<std::vector<int>> parents_all_roots(const ColoredGraph& g) {
  int n = g.n();
  std::vector<std::vector<int>> par(n);
  for (int r = 0; r < n; ++r) {
    par[r].assign(n, -1);
    std::vector<int> stack{r};
    std::vector<char> seen(n, 0);
    seen[r] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, w] : g.adj(v))
        if (!seen[u]) {
          seen[u] = 1;
          par[r][u] = v;
          stack.push_back(u);
        }
    }
  }
  return par;
}

CombTables make_tables(const ColoredGraph& g, const CombStructure& comb,
                       const std::vector<std::vector<int>>& par) {
  int n = g.n();
  int k = static_cast<int>(comb.spine.size());
  CombTables t;
  t.comb = comb;
  t.att.assign(n, -1);
  t.spine_pos.assign(n, -1);
  t.tooth_pos.assign(n, -1);
  for (int i = 0; i < k; ++i) {
    t.spine_pos[comb.spine[i]] = i;
    t.att[comb.spine[i]] = i;
    for (size_t p = 0; p < comb.teeth[i].size(); ++p) {
      t.att[comb.teeth[i][p]] = i;
      t.tooth_pos[comb.teeth[i][p]] = static_cast<int>(p);
    }
  }

  t.P.assign(n, std::vector<std::optional<SolveResult>>(k));
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < k; ++i) {
      const std::vector<int>& tooth = comb.teeth[i];
      if (tooth.empty() || x == tooth.back()) {
        t.P[x][i] = SolveResult{{x}};  // nothing beyond x left to pay for
        continue;
      }
      std::vector<int> verts;
      PathOptions opt;
      opt.first_forced = true;
      if (t.att[x] == i && t.spine_pos[x] == -1) {
        verts.assign(tooth.begin() + t.tooth_pos[x], tooth.end());
      } else {
        int s = comb.spine[i];
        for (int v = x; v != s; v = par[s][v]) verts.push_back(v);
        verts.push_back(s);
        opt.first_cover_radius = static_cast<int>(verts.size()) - 1;
        verts.insert(verts.end(), tooth.begin(), tooth.end());
      }
      std::vector<int> colors(verts.size());
      for (size_t p = 0; p < verts.size(); ++p) colors[p] = g.color(verts[p]);
      auto sub = path_mscs_core(colors, opt);
      if (sub) {
        SolveResult r;
        for (int pos : sub->witness) r.witness.push_back(verts[pos]);
        std::sort(r.witness.begin(), r.witness.end());
        t.P[x][i] = std::move(r);
      }
    }
  }

  t.Q.assign(n, std::vector<std::optional<int>>(k));
  for (int x = 0; x < n; ++x) {
    int a = t.att[x];
    auto size_of = [&t, x](int j) -> std::optional<int> {
      if (!t.P[x][j]) return std::nullopt;
      return t.P[x][j]->size();
    };
    t.Q[x][a] = size_of(a);
    for (int i = a + 1; i < k; ++i) {
      auto s = size_of(i);
      t.Q[x][i] =
          t.Q[x][i - 1] && s ? std::optional<int>(*t.Q[x][i - 1] + *s) : std::nullopt;
    }
    for (int i = a - 1; i >= 0; --i) {
      auto s = size_of(i);
      t.Q[x][i] =
          t.Q[x][i + 1] && s ? std::optional<int>(*t.Q[x][i + 1] + *s) : std::nullopt;
    }
  }
  return t;
}

// Same subproblem S(x, y) as the plain tree solver, but tooth-shaped children
// are looked up in P instead of recursed into, and the batched per-endpoint
// tooth costs are re-derived from Q as a consistency check.
class CombDp {
public:
  CombDp(const ColoredGraph& g, const CombStructure& comb)
      : g_(g),
        n_(g.n()),
        dist_(all_pairs(g)),
        par_(parents_all_roots(g)),
        t_(make_tables(g, comb, par_)) {}

  const std::optional<SolveResult>& solve(int x, int y) {
    Cell& cell = memo_[{x, y}];
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

  bool below(int v, int u, int y) const {
    return dist_[v][u] == dist_[v][y] + dist_[u][y];
  }

  // Same pair rule as the tree solver: x-side of the x-z path carries x's
  // color, z-side carries z's, an equidistant vertex needs all three equal.
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
      if (dist_[z][x] < 2 * dist_[u][x]) continue;
      if (!pair_ok(x, z)) continue;
      auto cand = assemble(x, y, u, z);
      if (cand && (!best || cand->better_than(*best))) best = std::move(cand);
    }
    return best;
  }

  std::optional<SolveResult> assemble(int x, int y, int u, int z) {
    std::vector<int> path;
    for (int v = z; v != y; v = par_[x][v]) path.push_back(v);
    path.push_back(y);
    std::reverse(path.begin(), path.end());

    std::set<int> witness{x, z};
    int size = 2;
    // (spine column, paid size) per endpoint, for the Q cross-check.
    std::vector<std::pair<int, int>> xcols, zcols;
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      int prev = i == 0 ? u : path[i - 1];
      int next = i + 1 < path.size() ? path[i + 1] : -1;
      for (auto [c, w] : g_.adj(v)) {
        if (c == prev || c == next) continue;
        std::int64_t dx = dist_[x][v], dz = dist_[z][v];
        int col = t_.spine_pos[v];
        bool tooth_child =
            col != -1 && !t_.comb.teeth[col].empty() && c == t_.comb.teeth[col][0];
        bool below_z = v == z && t_.spine_pos[z] == -1 &&
                       t_.att[c] == t_.att[z] &&
                       t_.tooth_pos[c] == t_.tooth_pos[z] + 1;
        const std::optional<SolveResult>* sub;
        std::vector<std::pair<int, int>>* record = nullptr;
        int record_col = -1;
        if (tooth_child) {
          if (dx < dz) {
            sub = &t_.P[x][col];
            record = &xcols;
            record_col = col;
          } else if (dx > dz) {
            sub = &t_.P[z][col];
            record = &zcols;
            record_col = col;
          } else {
            // equidistant column: charged to the cheaper endpoint, part of
            // neither window
            const auto& sx = t_.P[x][col];
            const auto& sz = t_.P[z][col];
            sub = !sx || (sz && sz->better_than(*sx)) ? &sz : &sx;
          }
        } else if (below_z) {
          sub = &t_.P[z][t_.att[z]];
          record = &zcols;
          record_col = t_.att[z];
        } else {
          if (dx < dz) {
            sub = &solve(x, c);
          } else if (dx > dz) {
            sub = &solve(z, c);
          } else {
            const auto& sx = solve(x, c);
            const auto& sz = solve(z, c);
            sub = !sx || (sz && sz->better_than(*sx)) ? &sz : &sx;
          }
        }
        if (!*sub) return std::nullopt;
        size += (*sub)->size() - 1;
        witness.insert((*sub)->witness.begin(), (*sub)->witness.end());
        if (record) record->push_back({record_col, (*sub)->size()});
      }
    }
    if (static_cast<int>(witness.size()) != size)
      throw std::logic_error("subsolution witnesses overlap beyond their shared vertex");
    check_window(x, xcols, false);
    check_window(z, zcols, true);
    return SolveResult{std::vector<int>(witness.begin(), witness.end())};
  }

  // The tooth costs charged to one endpoint cover a contiguous window of
  // spine columns on one side of the endpoint's own column, so their sum
  // must come out of Q by differencing. Window columns that paid nothing
  // must be empty teeth, which Q counts with sentinel size 1. Windows whose
  // anchor-side difference term is infeasible cannot be checked this way;
  // those columns lie outside the current sub-universe.
  void check_window(int owner, const std::vector<std::pair<int, int>>& cols,
                    bool anchor_may_touch) const {
    if (cols.empty()) return;
    int a = t_.att[owner];
    int lo = cols[0].first, hi = cols[0].first, loop_sum = 0;
    std::set<int> seen;
    for (auto [c, s] : cols) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      loop_sum += s;
      if (!seen.insert(c).second)
        throw std::logic_error("spine column charged twice to one endpoint");
    }
    bool side_ok = anchor_may_touch ? (hi <= a || lo >= a) : (hi < a || lo > a);
    if (!side_ok) throw std::logic_error("tooth window spans the endpoint's own column");
    std::optional<int> q;
    if (lo > a) {
      if (t_.Q[owner][hi] && t_.Q[owner][lo - 1])
        q = *t_.Q[owner][hi] - *t_.Q[owner][lo - 1];
    } else if (hi < a) {
      if (t_.Q[owner][lo] && t_.Q[owner][hi + 1])
        q = *t_.Q[owner][lo] - *t_.Q[owner][hi + 1];
    } else {
      int far = lo == a ? hi : lo;
      if (!t_.Q[owner][far])
        throw std::logic_error("anchored tooth window hit an infeasible column");
      q = *t_.Q[owner][far];
    }
    if (!q) return;
    int expect = *q;
    for (int j = lo; j <= hi; ++j)
      if (!seen.count(j)) {
        if (!t_.comb.teeth[j].empty())
          throw std::logic_error("unpaid nonempty tooth inside a charged window");
        expect -= 1;
      }
    if (loop_sum != expect)
      throw std::logic_error("tooth cost sum disagrees with the prefix table");
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<std::int64_t>> dist_;
  std::vector<std::vector<int>> par_;
  CombTables t_;
  std::map<std::pair<int, int>, Cell> memo_;
};

}  // namespace

CombTables build_comb_tables(const ColoredGraph& g, const CombStructure& comb) {
  return make_tables(g, comb, parents_all_roots(g));
}

SolveResult solve_mscs_comb(const ColoredGraph& g) {
  std::optional<CombStructure> comb = comb_structure(g);
  if (!comb) throw std::invalid_argument("solver requires a comb");
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

  int y_root = -1;
  for (const Edge& e : g.edges()) {
    bool iu = blocks.block_of[e.u] == L, iv = blocks.block_of[e.v] == L;
    if (iu != iv) {
      if (y_root != -1) throw std::logic_error("leaf block with two boundary edges");
      y_root = iu ? e.v : e.u;
    }
  }
  if (y_root == -1) throw std::logic_error("leaf block without boundary edge");

  CombDp dp(g, *comb);
  std::optional<SolveResult> best;
  for (int x : blocks.members[L]) {
    const auto& r = dp.solve(x, y_root);
    if (r && (!best || r->better_than(*best))) best = r;
  }
  if (!best) throw std::logic_error("every anchor infeasible; full vertex set is a solution");
  return *best;
}

}  // namespace conset
