#pragma once

#include <optional>
#include <vector>

#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Overlay digraph for the path solver. Positions 0..n-1 are the path
// vertices in order; dummy node j (one per color block) is n+j. A type-1
// arc joins the only pair of picks (i in block j, k in block j+1) that can
// be adjacent in a solution across that block boundary: k = 2a+1-i for
// boundary index a. Type-2 arcs join every position with its block dummy
// both ways; interior dummies carry weight 1, the end dummies weight 0.
struct OverlayArc {
  int from = 0;
  int to = 0;
  int weight = 0;
};

struct OverlayGraph {
  int num_positions = 0;
  int num_blocks = 0;
  std::vector<int> block_of_pos;
  std::vector<int> block_start;  // per block: first position
  std::vector<int> block_end;    // per block: last position
  std::vector<OverlayArc> type1;
  std::vector<OverlayArc> type2;
  // partner[i] = head of the type-1 arc leaving position i, or -1.
  std::vector<int> partner;
};

OverlayGraph build_overlay(const std::vector<int>& colors);

struct PathOptions {
  // Position 0 must be picked and be the leftmost pick; the next pick may
  // appear no earlier than max(2*first_cover_radius, 1), so that position
  // first_cover_radius is still served by position 0 (ties resolved by the
  // usual color rules). Positions 0..first_cover_radius must share color 0.
  bool first_forced = false;
  int first_cover_radius = 0;
  // The last position must be picked (and is then the rightmost pick).
  bool last_forced = false;
};

// Minimum strict consistent subset of a colored path, by positions.
// Unconstrained instances are always feasible; forced variants may not be.
// Equivalent to a shortest forward path across the overlay, evaluated by
// one left-to-right relaxation sweep that counts picked positions directly.
std::optional<SolveResult> path_mscs_core(const std::vector<int>& colors,
                                          const PathOptions& opt = {});

// The same, on a path-shaped ColoredGraph; witness holds vertex ids.
SolveResult solve_mscs_path(const ColoredGraph& g);

// Cut the cycle at each vertex of its smallest block, solve the resulting
// path with both copies of the cut vertex forced, and keep the best.
SolveResult solve_mscs_cycle(const ColoredGraph& g);

}  // namespace conset
