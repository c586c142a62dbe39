#pragma once

#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Exact minimum strict consistent subset of a colored spider (a tree with
// exactly one vertex of degree >= 3), O(|B| * n) path solves where B is the
// center's block. Throws std::invalid_argument on non-spiders.
SolveResult solve_mscs_spider(const ColoredGraph& g);

}  // namespace conset
