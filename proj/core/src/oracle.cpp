#include "conset/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "conset/blocks.hpp"
#include "conset/distance.hpp"

namespace conset {

namespace {

enum class Kind { Cs, Scs, Css };

bool set_ok(const std::vector<std::vector<std::int64_t>>& dist, const ColoredGraph& g,
            const std::vector<int>& members, Kind kind) {
  for (int v = 0; v < g.n(); ++v) {
    std::int64_t best = -1;
    for (int s : members) {
      std::int64_t d = dist[v][s];
      if (best == -1 || d < best) best = d;
    }
    if (kind == Kind::Scs) {
      for (int s : members)
        if (dist[v][s] == best && g.color(s) != g.color(v)) return false;
    } else {
      bool own = false;
      for (int s : members)
        if (dist[v][s] == best && g.color(s) == g.color(v)) {
          own = true;
          break;
        }
      if (!own) return false;
    }
  }
  return true;
}

// Ascending cardinality, lexicographic within each cardinality. `required`
// is a per-vertex bitmask (colors, blocks) that any feasible set must cover
// in full; it prunes without affecting which sets are feasible.
SolveResult enumerate(const ColoredGraph& g, Kind kind, int cap, int lower_bound,
                      const std::vector<std::uint64_t>& vertex_bits, std::uint64_t full_bits) {
  if (g.n() > cap) throw CapExceeded("instance too large for exhaustive solver");
  if (!g.is_connected())
    throw std::invalid_argument("exhaustive solver requires a connected graph");
  auto dist = all_pairs(g);
  int n = g.n();
  for (int k = std::max(1, lower_bound); k <= n; ++k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
      std::uint64_t bits = 0;
      for (int v : c) bits |= vertex_bits[v];
      if (bits == full_bits && set_ok(dist, g, c, kind)) return SolveResult{c};
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw std::logic_error("no feasible set found; the full vertex set is always feasible");
}

std::vector<std::uint64_t> color_bits(const ColoredGraph& g, std::uint64_t& full) {
  std::map<int, int> idx;
  for (int v = 0; v < g.n(); ++v) idx.emplace(g.color(v), static_cast<int>(idx.size()));
  std::vector<std::uint64_t> bits(g.n());
  full = 0;
  for (int v = 0; v < g.n(); ++v) {
    bits[v] = std::uint64_t{1} << idx[g.color(v)];
    full |= bits[v];
  }
  return bits;
}

std::vector<std::uint64_t> block_bits(const ColoredGraph& g, std::uint64_t& full,
                                      int& num_blocks) {
  BlockDecomposition d = decompose_blocks(g);
  num_blocks = static_cast<int>(d.members.size());
  std::vector<std::uint64_t> bits(g.n());
  full = 0;
  for (int v = 0; v < g.n(); ++v) {
    bits[v] = std::uint64_t{1} << (d.block_of[v] % 64);
    full |= bits[v];
  }
  return bits;
}

}  // namespace

SolveResult brute_mcs(const ColoredGraph& g, int cap) {
  std::uint64_t full;
  auto bits = color_bits(g, full);
  // Every vertex needs a nearest member of its own color, so each used
  // color appears in any feasible set.
  return enumerate(g, Kind::Cs, cap, g.num_colors(), bits, full);
}

SolveResult brute_mscs(const ColoredGraph& g, int cap) {
  // A strict set meets every monochromatic block: walking a shortest path
  // from a block vertex to its nearest member crosses the block boundary
  // otherwise, and the boundary vertex would see a wrong-colored nearest
  // member at equal distance.
  std::uint64_t full;
  int nb;
  auto bits = block_bits(g, full, nb);
  return enumerate(g, Kind::Scs, cap, nb, bits, full);
}

SolveResult brute_mcss(const ColoredGraph& g, int cap) {
  std::uint64_t full;
  int nb;
  auto bits = block_bits(g, full, nb);
  return enumerate(g, Kind::Css, cap, nb, bits, full);
}

SolveResult brute_dominating(const ColoredGraph& g, int cap) {
  if (g.n() > cap) throw CapExceeded("instance too large for exhaustive solver");
  if (g.n() > 63) throw CapExceeded("dominating oracle is bitmask based");
  int n = g.n();
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (auto [u, w] : g.adj(v)) closed[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
      std::uint64_t covered = 0;
      for (int v : c) covered |= closed[v];
      if (covered == all) return SolveResult{c};
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw std::logic_error("vertex set always dominates itself");
}

void Max2SatInstance::validate() const {
  if (num_vars < 1) throw std::invalid_argument("formula needs at least one variable");
  for (auto [a, b] : clauses) {
    for (int lit : {a, b}) {
      if (lit == 0) throw std::invalid_argument("literal 0 is reserved");
      if (std::abs(lit) > num_vars) throw std::invalid_argument("literal out of range");
    }
  }
}

Max2SatResult brute_max2sat(const Max2SatInstance& f, int cap) {
  f.validate();
  if (f.num_vars > cap || f.num_vars > 31)
    throw CapExceeded("formula too large for exhaustive solver");
  Max2SatResult best;
  best.satisfied = -1;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.num_vars); ++a) {
    int sat = 0;
    for (auto [x, y] : f.clauses) {
      bool xv = (a >> (std::abs(x) - 1)) & 1u;
      bool yv = (a >> (std::abs(y) - 1)) & 1u;
      if ((x > 0 ? xv : !xv) || (y > 0 ? yv : !yv)) ++sat;
    }
    if (sat > best.satisfied) {
      best.satisfied = sat;
      best.assignment = a;
    }
  }
  return best;
}

Max2SatInstance parse_dimacs_2cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Max2SatInstance f;
  int expected_clauses = -1;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c") continue;
    if (first == "p") {
      if (expected_clauses != -1) throw std::invalid_argument("duplicate problem line");
      std::string fmt;
      int nv, nc;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf")
        throw std::invalid_argument("problem line must be 'p cnf <vars> <clauses>'");
      f.num_vars = nv;
      expected_clauses = nc;
      continue;
    }
    if (expected_clauses == -1)
      throw std::invalid_argument("clause before problem line");
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 2)
          throw std::invalid_argument("every clause must have exactly two literals");
        f.clauses.emplace_back(pending[0], pending[1]);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!ls.eof()) throw std::invalid_argument("non-numeric token in clause");
  }
  if (expected_clauses == -1) throw std::invalid_argument("missing problem line");
  if (!pending.empty()) throw std::invalid_argument("unterminated clause");
  if (static_cast<int>(f.clauses.size()) != expected_clauses)
    throw std::invalid_argument("clause count does not match problem line");
  f.validate();
  return f;
}

Max2SatInstance load_dimacs_2cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dimacs_2cnf(ss.str());
}

}  // namespace conset
