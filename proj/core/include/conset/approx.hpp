#pragma once

#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Factor-2 approximation for the minimum strict consistent subset of a
// tree: take both endpoints of every edge that joins two different
// monochromatic blocks. The result is always strict consistent, and since
// a tree with b blocks has b-1 such edges it holds at most 2b-2 vertices
// (fewer when endpoints repeat), while any solution needs at least b.
// A single-block tree yields one vertex.
SolveResult approx_scs_tree(const ColoredGraph& g);

}  // namespace conset
