#include <stdexcept>

#include "conset/consistency.hpp"
#include "conset/generators.hpp"
#include "conset/oracle.hpp"
#include "conset/spider_solver.hpp"
#include "conset/tree_solver.hpp"
#include "doctest.h"
#include "test_util.hpp"

using conset::solve_mscs_spider;

TEST_CASE("pinned spider instances") {
  // the three-leg instance where only one vertex can be dropped
  auto g = testutil::make_graph({0, 0, 1, 0, 1, 0, 1},
                                {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  auto r = solve_mscs_spider(g);
  CHECK(r.size() == 6);
  CHECK(conset::verify_scs(g, r.witness).ok);

  // monochromatic star
  auto star = testutil::make_graph({2, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(solve_mscs_spider(star).size() == 1);

  // star with colored leaves: everything must stay
  auto hard = testutil::make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(solve_mscs_spider(hard).size() == conset::brute_mscs(hard).size());
}

TEST_CASE("random spiders match the oracle") {
  conset::Rng rng(16180339);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 4 + rng.below(10);
    auto g = conset::random_spider(rng, n, 1 + rng.below(3));
    auto fast = solve_mscs_spider(g);
    auto slow = conset::brute_mscs(g);
    REQUIRE(fast.size() == slow.size());
    REQUIRE(conset::verify_scs(g, fast.witness).ok);
  }
}

TEST_CASE("random spiders match the general tree solver at larger sizes") {
  conset::Rng rng(333);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 20 + rng.below(41);
    auto g = conset::random_spider(rng, n, 1 + rng.below(3));
    auto fast = solve_mscs_spider(g);
    auto tree = conset::solve_mscs_tree(g);
    REQUIRE(fast.size() == tree.size());
    REQUIRE(conset::verify_scs(g, fast.witness).ok);
  }
}

TEST_CASE("scrambled labels") {
  conset::Rng rng(55);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 5 + rng.below(8);
    auto g = conset::relabel(conset::random_spider(rng, n, 2),
                             conset::random_permutation(rng, n));
    REQUIRE(solve_mscs_spider(g).size() == conset::brute_mscs(g).size());
  }
}

TEST_CASE("non-spiders are rejected") {
  CHECK_THROWS_AS(solve_mscs_spider(testutil::path_graph({0, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(solve_mscs_spider(testutil::cycle_graph({0, 1, 0, 1})), std::invalid_argument);
}
