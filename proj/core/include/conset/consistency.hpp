#pragma once

#include <string>
#include <vector>

#include "conset/graph.hpp"

namespace conset {

// Which membership rule a candidate set is checked against.
//  - Consistent: every vertex has some nearest set-member of its own color.
//  - Strict:     every nearest set-member has the vertex's color.
//  - CoveringConsistent: Consistent, plus every monochromatic block
//    contains a set member.
enum class Rule { Consistent, Strict, CoveringConsistent };

struct Violation {
  int vertex = -1;
  std::vector<int> nearest;  // exact nearest set-members, sorted
  std::string reason;
};

struct VerifyReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::vector<int> missed_blocks;  // CoveringConsistent only: block ids with no member in S
};

// S must be non-empty with in-range, duplicate-free vertices (throws
// otherwise). Runs one sweep per color in S for the Consistent rule and a
// single multi-source sweep for Strict; exact nearest sets are only
// recomputed for the vertices that fail.
VerifyReport verify_set(const ColoredGraph& g, const std::vector<int>& S, Rule rule);

inline VerifyReport verify_cs(const ColoredGraph& g, const std::vector<int>& S) {
  return verify_set(g, S, Rule::Consistent);
}
inline VerifyReport verify_scs(const ColoredGraph& g, const std::vector<int>& S) {
  return verify_set(g, S, Rule::Strict);
}
inline VerifyReport verify_css(const ColoredGraph& g, const std::vector<int>& S) {
  return verify_set(g, S, Rule::CoveringConsistent);
}

}  // namespace conset
