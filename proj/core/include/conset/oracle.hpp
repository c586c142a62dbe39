#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conset/graph.hpp"
#include "conset/result.hpp"

namespace conset {

// Raised when an exhaustive solver is asked for more than its cap allows.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleCap = 22;

// Exhaustive reference solvers. Subsets are tried in ascending cardinality
// and, within a cardinality, in lexicographic order, so the returned
// witness is the lexicographically smallest optimum. Throw CapExceeded when
// n exceeds `cap`; require a connected graph.
SolveResult brute_mcs(const ColoredGraph& g, int cap = kDefaultOracleCap);
SolveResult brute_mscs(const ColoredGraph& g, int cap = kDefaultOracleCap);
SolveResult brute_mcss(const ColoredGraph& g, int cap = kDefaultOracleCap);

// Minimum dominating set; colors are ignored.
SolveResult brute_dominating(const ColoredGraph& g, int cap = kDefaultOracleCap);

// 2-CNF with exactly two literals per clause, as signed 1-based variable
// ids. Clauses mentioning one variable twice are legal here; consumers that
// cannot handle them reject them themselves.
struct Max2SatInstance {
  int num_vars = 0;
  std::vector<std::pair<int, int>> clauses;

  void validate() const;  // throws std::invalid_argument
};

struct Max2SatResult {
  int satisfied = 0;
  std::uint32_t assignment = 0;  // bit i-1 = value of variable i
};

// Tries assignments in ascending numeric order and keeps the first strict
// improvement, so the reported assignment is deterministic.
Max2SatResult brute_max2sat(const Max2SatInstance& f, int cap = 24);

// Strict DIMACS CNF reader that additionally requires every clause to have
// exactly two literals. Throws std::invalid_argument on any deviation.
Max2SatInstance parse_dimacs_2cnf(const std::string& text);
Max2SatInstance load_dimacs_2cnf(const std::string& path);

}  // namespace conset
