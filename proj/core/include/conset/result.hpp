#pragma once

#include <vector>

namespace conset {

// Solver output. The witness is the answer; size is never stored
// separately, so it cannot drift from the set that backs it.
struct SolveResult {
  std::vector<int> witness;  // sorted ascending, no duplicates

  int size() const { return static_cast<int>(witness.size()); }

  // Orders by (size, lexicographic witness); solvers use this to pick a
  // canonical optimum among ties.
  bool better_than(const SolveResult& o) const {
    if (size() != o.size()) return size() < o.size();
    return witness < o.witness;
  }

  bool operator==(const SolveResult& o) const = default;
};

}  // namespace conset
