#include "conset/approx.hpp"

#include <set>
#include <stdexcept>

#include "conset/blocks.hpp"
#include "conset/classify.hpp"

namespace conset {

SolveResult approx_scs_tree(const ColoredGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("approximation requires a connected tree");
  BlockDecomposition blocks = decompose_blocks(g);
  std::set<int> picked;
  for (const Edge& e : g.edges())
    if (blocks.block_of[e.u] != blocks.block_of[e.v]) {
      picked.insert(e.u);
      picked.insert(e.v);
    }
  if (picked.empty()) picked.insert(blocks.members[0][0]);
  return SolveResult{std::vector<int>(picked.begin(), picked.end())};
}

}  // namespace conset
