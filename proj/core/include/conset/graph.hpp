#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conset {

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t w = 1;
};

// Undirected vertex-colored graph. Vertices are 0..n-1, colors are small
// non-negative ints. Weights are positive integers; unweighted graphs keep
// w == 1 on every edge so distance code never branches.
class ColoredGraph {
public:
  ColoredGraph() = default;
  ColoredGraph(int n, std::vector<int> colors, bool weighted = false);

  int n() const { return n_; }
  bool weighted() const { return weighted_; }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, std::int64_t>>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  void add_edge(int u, int v, std::int64_t w = 1);

  int num_colors() const;  // distinct colors actually used

  // Throws std::invalid_argument on structural problems: out-of-range
  // endpoints, self loops, duplicate edges, non-positive weights, or a
  // weight != 1 in an unweighted graph.
  void validate() const;

  bool is_connected() const;

  // Canonical JSON: fixed key order {n, weighted, colors, edges}, edges
  // sorted by (u,v) with u < v, two-space indent, trailing newline. Two
  // graphs with the same structure serialize byte-identically.
  std::string to_json() const;
  static ColoredGraph from_json(const std::string& text);

  static ColoredGraph load_file(const std::string& path);
  void save_file(const std::string& path) const;

private:
  int n_ = 0;
  bool weighted_ = false;
  std::vector<int> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
};

}  // namespace conset
