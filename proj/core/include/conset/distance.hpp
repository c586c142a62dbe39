#pragma once

#include <cstdint>
#include <vector>

#include "conset/graph.hpp"

namespace conset {

inline constexpr std::int64_t kUnreachable = -1;

// One row of the distance matrix: dist[v] from source, parent[v] on some
// shortest path (parent[source] == -1). Unweighted graphs use BFS, weighted
// ones Dijkstra; both tie-break by smallest vertex id so parents are
// deterministic.
struct DistRow {
  std::vector<std::int64_t> dist;
  std::vector<int> parent;
};

DistRow shortest_from(const ColoredGraph& g, int source);

// dist[u][v] for all pairs. Fine for the sizes the exact solvers handle.
std::vector<std::vector<std::int64_t>> all_pairs(const ColoredGraph& g);

// Members of `set` at minimum distance from v, ascending by vertex id.
// `set` must be non-empty and reachable.
std::vector<int> nearest_in_set(const std::vector<std::vector<std::int64_t>>& dist, int v,
                                const std::vector<int>& set);

}  // namespace conset
