#pragma once

#include <optional>
#include <vector>

#include "conset/classify.hpp"
#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Preprocessing tables for the comb solver, exposed for testing.
//
// P[x][i]: minimum strict consistent subset of the path running from x
// through spine vertex i down to the leaf of tooth i, with x forced into
// the solution and required to serve everything from x up to spine vertex
// i. If x sits on tooth i the instance is just the downward stub from x.
// Empty teeth (and x at the tooth leaf) store the sentinel {x} of size 1.
// Infeasible instances are nullopt.
//
// Q[x][i]: sum of the sizes P[x][j] over all spine indices j whose spine
// vertex lies on path(x, spine[i]); nullopt as soon as any such P is.
struct CombTables {
  CombStructure comb;
  std::vector<int> att;        // vertex -> spine index it hangs under (or sits on)
  std::vector<int> spine_pos;  // vertex -> spine index, -1 off the spine
  std::vector<int> tooth_pos;  // vertex -> 0-based position in its tooth, -1 on the spine
  std::vector<std::vector<std::optional<SolveResult>>> P;
  std::vector<std::vector<std::optional<int>>> Q;
};

CombTables build_comb_tables(const ColoredGraph& g, const CombStructure& comb);

// Exact minimum strict consistent subset of a colored comb. Same recursion
// as the tree solver, but tooth-shaped subproblems come out of P and their
// batched sums are checked against Q. Throws std::invalid_argument if the
// graph is not a comb.
SolveResult solve_mscs_comb(const ColoredGraph& g);

}  // namespace conset
