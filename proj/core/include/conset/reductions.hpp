#pragma once

#include <string>
#include <vector>

#include "conset/graph.hpp"
#include "conset/oracle.hpp"

namespace conset {

// Add one fresh vertex adjacent to everything else. The new graph's minimum
// consistent subset is exactly one larger than the source's minimum
// dominating set: the fresh vertex is the only one of its color, so it is
// always picked, and it sits at distance 1 from everyone. Source colors are
// ignored; originals keep their ids with color 0, the fresh vertex is n
// with color 1.
ColoredGraph dominating_to_mcs(const ColoredGraph& g);

// Weighted target whose minimum strict consistent subset is one larger than
// the source's minimum dominating set. Two copies of the source (edges of
// weight 2 inside each), a complete join of weight 3 between them, and a
// fresh vertex tied to every second-copy vertex by weight 1. First copy
// keeps ids with color 0; the second copy shifts by n and shares color 1
// with the fresh vertex 2n. The weights satisfy 2 < 3+1 <= 2*2, so a pick
// in the first copy strictly covers exactly its closed neighborhood there.
ColoredGraph dominating_to_mscs(const ColoredGraph& g);

// Tree built from a 2-CNF formula so that its minimum consistent subsets
// track the maximum number of simultaneously satisfiable clauses: the
// formula has an assignment satisfying k clauses iff the tree has a
// consistent subset of size target_size(k).
//
// Layout, with n variables, m clauses and M anchor vertices per literal:
//   central path v^1 v^2 v^3 (ids 0..2), v^1 the hub;
//   per variable, two 4-vertex literal paths hanging off the hub, plus M
//   anchors on each first path vertex; anchor j of the positive side shares
//   a color with anchor j of the negative side, and nothing else;
//   per clause, a 7-vertex clause path hung off the hub at its middle, and
//   one 7-vertex occurrence path per literal, colored like that literal's
//   path and attached near the clause path's ends.
struct Max2SatTree {
  ColoredGraph tree;
  Max2SatInstance formula;
  int anchors_per_side = 0;

  int hub(int j) const { return j - 1; }  // v^1..v^3
  int pos(int i, int a) const;            // positive literal path, i 0-based, a 1..4
  int neg(int i, int a) const;
  int pos_anchor(int i, int j) const;  // j 1..anchors_per_side
  int neg_anchor(int i, int j) const;
  int left(int c, int a) const;    // occurrence path of the first literal, a 1..7
  int right(int c, int a) const;   // occurrence path of the second literal
  int clause(int c, int a) const;  // clause path

  // Size of the consistent subset that an assignment satisfying k clauses
  // buys: n*(M+2) per variable side, 2 per satisfied and 3 per unsatisfied
  // clause, plus the far end of the central path.
  int target_size(int k) const;

  // The consistent subset induced by a concrete assignment; its size is
  // target_size(number of clauses the assignment satisfies).
  std::vector<int> assignment_witness(const std::vector<bool>& assignment) const;
};

// Builds the tree above. Clauses mentioning the same variable twice are
// rejected: the gadget needs two distinct literal paths per clause.
// anchors_per_side = -1 picks the default 3*(num_vars + num_clauses) + 10,
// large enough that cheap solutions cannot afford splitting anchor pairs.
Max2SatTree max2sat_to_tree(const Max2SatInstance& f, int anchors_per_side = -1);

// Recomputes the structural invariants of a constructed instance: vertex,
// edge and color-multiplicity counts, treeness, attachment distances.
// Returns an empty string when everything holds, else a complaint. A
// corrupted instance (recolored or rewired vertex) is meant to fail here.
std::string check_max2sat_tree(const Max2SatTree& t);

// Certification of the two dominating-set reductions on a concrete source:
// run the exhaustive dominating-set solver on the source and the exhaustive
// (strict) consistent-subset solver on the target, then compare via the
// reduction's size formula. Propagates CapExceeded for oversized sources.
struct CertifyReport {
  bool ok = false;
  int source_value = 0;  // minimum dominating set of the source
  int target_value = 0;  // exhaustive optimum on the reduced graph
  int expected = 0;      // what the reduction predicts for target_value
};
CertifyReport certify_dominating_to_mcs(const ColoredGraph& g, int cap = kDefaultOracleCap);
CertifyReport certify_dominating_to_mscs(const ColoredGraph& g, int cap = kDefaultOracleCap);

}  // namespace conset
