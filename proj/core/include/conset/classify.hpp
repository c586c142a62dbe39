#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conset/graph.hpp"

namespace conset {

// Ordered from most to least specific; classify() returns the first match.
// A path is also a spider-free tree, a spider is also a tree, etc.
enum class GraphClass { Path, Cycle, Spider, Comb, Tree, General };

std::string class_name(GraphClass c);
std::optional<GraphClass> class_from_name(const std::string& name);

// Requires a connected graph.
GraphClass classify(const ColoredGraph& g);

bool is_tree(const ColoredGraph& g);

// Vertex order along the path, starting at the smaller-id endpoint.
// A single vertex counts as a path.
std::optional<std::vector<int>> path_structure(const ColoredGraph& g);

// Cyclic order starting at vertex 0, second vertex = its smaller neighbor.
std::optional<std::vector<int>> cycle_structure(const ColoredGraph& g);

// Tree with exactly one vertex of degree >= 3. Legs run outward from the
// center (center excluded), ordered by their first vertex id.
struct SpiderStructure {
  int center = -1;
  std::vector<std::vector<int>> legs;
};
std::optional<SpiderStructure> spider_structure(const ColoredGraph& g);

// Tree that decomposes as a spine path with at most one pendant path
// ("tooth") per spine vertex. teeth[i] runs from the spine vertex outward
// and may be empty. The spine always ends at leaves of the tree, so the
// first and last teeth are empty.
struct CombStructure {
  std::vector<int> spine;
  std::vector<std::vector<int>> teeth;
};
std::optional<CombStructure> comb_structure(const ColoredGraph& g);

}  // namespace conset
