#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conset/classify.hpp"
#include "conset/consistency.hpp"
#include "conset/generators.hpp"
#include "conset/oracle.hpp"
#include "conset/path_solver.hpp"
#include "doctest.h"
#include "test_util.hpp"

using conset::path_mscs_core;
using conset::PathOptions;

TEST_CASE("overlay shape") {
  auto h = conset::build_overlay({0, 0, 1, 1});
  CHECK(h.num_positions == 4);
  CHECK(h.num_blocks == 2);
  CHECK(h.block_of_pos == std::vector<int>{0, 0, 1, 1});
  CHECK(h.block_start == std::vector<int>{0, 2});
  CHECK(h.block_end == std::vector<int>{1, 3});
  CHECK(h.type2.size() == 8);  // two per position
  REQUIRE(h.type1.size() == 2);
  CHECK(h.partner == std::vector<int>{3, 2, -1, -1});
}

TEST_CASE("overlay bounds hold on random colorings") {
  conset::Rng rng(5150);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + rng.below(18);
    std::vector<int> colors(n);
    for (auto& c : colors) c = rng.below(3);
    auto h = conset::build_overlay(colors);
    CHECK(h.type2.size() == 2u * n);
    CHECK(h.type1.size() <= static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int k = h.partner[i];
      if (k == -1) continue;
      // mirror through the boundary between i's block and the next
      int a = h.block_end[h.block_of_pos[i]];
      CHECK(k == 2 * a + 1 - i);
      CHECK(h.block_of_pos[k] == h.block_of_pos[i] + 1);
    }
  }
}

TEST_CASE("core results on pinned instances") {
  auto r = path_mscs_core({0, 1, 0});
  REQUIRE(r.has_value());
  CHECK(r->size() == 3);

  r = path_mscs_core({0, 0, 1, 1});
  REQUIRE(r.has_value());
  CHECK(r->size() == 2);
  CHECK(conset::verify_scs(testutil::path_graph({0, 0, 1, 1}), r->witness).ok);

  r = path_mscs_core({0, 0, 1});
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{1, 2});

  r = path_mscs_core({2});
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{0});
}

TEST_CASE("forcing the first position") {
  PathOptions opt;
  opt.first_forced = true;

  // (0,2) is not a usable pair here: the mirror of 0 across the boundary
  // after position 1 is 3, past the end. Everything must be picked.
  auto r = path_mscs_core({0, 0, 1}, opt);
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{0, 1, 2});

  // radius 1 pushes the second pick to >= 2, but position 2 cannot pair
  // with 0 across the boundary: infeasible.
  opt.first_cover_radius = 1;
  CHECK_FALSE(path_mscs_core({0, 0, 1}, opt).has_value());

  r = path_mscs_core({0, 0, 0, 1, 1}, opt);
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{0, 2, 3});
}

TEST_CASE("forcing both ends") {
  PathOptions opt;
  opt.first_forced = true;
  opt.last_forced = true;
  auto r = path_mscs_core({0, 0, 0}, opt);
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{0, 2});

  // ends of different blocks must pair exactly through the boundary
  r = path_mscs_core({0, 0, 1, 1}, opt);
  REQUIRE(r.has_value());
  CHECK(r->size() == 2);
  CHECK(r->witness == std::vector<int>{0, 3});

  // {0,2} leaves vertex 1 tied between two color-0 picks, so the only way
  // out is picking everything.
  r = path_mscs_core({0, 1, 0}, opt);
  REQUIRE(r.has_value());
  CHECK(r->witness == std::vector<int>{0, 1, 2});

  // with a cover radius the middle is off limits and nothing fits
  opt.first_cover_radius = 1;
  CHECK_FALSE(path_mscs_core({0, 0, 1}, opt).has_value());
}

TEST_CASE("path solver matches the oracle on random instances") {
  conset::Rng rng(424242);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 1 + rng.below(14);
    auto g = conset::random_path(rng, n, 1 + rng.below(3));
    auto fast = conset::solve_mscs_path(g);
    auto slow = conset::brute_mscs(g);
    REQUIRE(fast.size() == slow.size());
    REQUIRE(conset::verify_scs(g, fast.witness).ok);
  }
}

TEST_CASE("path solver accepts scrambled labels") {
  conset::Rng rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + rng.below(12);
    auto g = conset::random_path(rng, n, 2);
    auto h = conset::relabel(g, conset::random_permutation(rng, n));
    auto fast = conset::solve_mscs_path(h);
    auto slow = conset::brute_mscs(h);
    REQUIRE(fast.size() == slow.size());
    REQUIRE(conset::verify_scs(h, fast.witness).ok);
  }
}

TEST_CASE("cycle solver pinned instances") {
  auto c3 = testutil::cycle_graph({0, 1, 1});
  CHECK(conset::solve_mscs_cycle(c3).size() == 3);

  auto c4 = testutil::cycle_graph({0, 0, 1, 1});
  auto r = conset::solve_mscs_cycle(c4);
  CHECK(r.size() == 2);
  CHECK(r.witness == std::vector<int>{0, 3});

  auto mono = testutil::cycle_graph({1, 1, 1});
  CHECK(conset::solve_mscs_cycle(mono).size() == 1);
}

TEST_CASE("cycle solver matches the oracle on random instances") {
  conset::Rng rng(8675309);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 3 + rng.below(12);
    auto g = conset::random_cycle(rng, n, 1 + rng.below(3));
    auto fast = conset::solve_mscs_cycle(g);
    auto slow = conset::brute_mscs(g);
    REQUIRE(fast.size() == slow.size());
    REQUIRE(conset::verify_scs(g, fast.witness).ok);
  }
}

TEST_CASE("solvers reject wrong shapes") {
  auto star = testutil::make_graph({0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(conset::solve_mscs_path(star), std::invalid_argument);
  CHECK_THROWS_AS(conset::solve_mscs_cycle(star), std::invalid_argument);
}
