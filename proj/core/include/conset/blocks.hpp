#pragma once

#include <vector>

#include "conset/graph.hpp"

namespace conset {

// Partition into maximal monochromatic connected subgraphs ("blocks").
// Block ids follow discovery order from vertex 0 upward, so they are
// deterministic for a given graph.
struct BlockDecomposition {
  std::vector<int> block_of;             // vertex -> block id
  std::vector<std::vector<int>> members;  // block id -> sorted vertices
  std::vector<int> block_color;
  // Adjacency between blocks (dedup'd, sorted). On a tree this is the
  // block tree; on general graphs just the quotient graph.
  std::vector<std::vector<int>> block_adj;
};

BlockDecomposition decompose_blocks(const ColoredGraph& g);

// Blocks with quotient degree <= 1.
std::vector<int> leaf_blocks(const BlockDecomposition& d);

}  // namespace conset
