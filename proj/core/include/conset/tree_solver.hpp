#pragma once

#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Exact minimum strict consistent subset of a colored tree, O(n^4).
// Works for unit and positive integer edge weights; distances are int64.
// The returned witness is sorted and always passes the strict verifier.
// Throws std::invalid_argument if the graph is not a connected tree.
SolveResult solve_mscs_tree(const ColoredGraph& g);

// Entry point for explicitly weighted instances; same algorithm, the
// distance layer already handles weights.
SolveResult solve_mscs_tree_weighted(const ColoredGraph& g);

}  // namespace conset
