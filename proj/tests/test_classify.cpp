#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "conset/classify.hpp"
#include "conset/generators.hpp"
#include "doctest.h"
#include "test_util.hpp"

using conset::classify;
using conset::GraphClass;

TEST_CASE("class names round trip") {
  for (auto c : {GraphClass::Path, GraphClass::Cycle, GraphClass::Spider, GraphClass::Comb,
                 GraphClass::Tree, GraphClass::General}) {
    auto back = conset::class_from_name(conset::class_name(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(conset::class_from_name("nope").has_value());
}

TEST_CASE("tiny graphs") {
  CHECK(classify(conset::ColoredGraph(1, {0})) == GraphClass::Path);
  CHECK(classify(testutil::path_graph({0, 1})) == GraphClass::Path);
  CHECK(classify(testutil::cycle_graph({0, 1, 0})) == GraphClass::Cycle);
}

TEST_CASE("star is a spider, not a comb") {
  auto g = testutil::make_graph({0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(classify(g) == GraphClass::Spider);
  auto s = conset::spider_structure(g);
  REQUIRE(s.has_value());
  CHECK(s->center == 0);
  REQUIRE(s->legs.size() == 3);
  CHECK(s->legs[0] == std::vector<int>{1});
}

TEST_CASE("spider with long legs") {
  // center 2, legs 2-1-0, 2-3-4, 2-5.
  auto g = testutil::make_graph({0, 0, 0, 0, 0, 0}, {{2, 1}, {1, 0}, {2, 3}, {3, 4}, {2, 5}});
  CHECK(classify(g) == GraphClass::Spider);
  auto s = conset::spider_structure(g);
  REQUIRE(s.has_value());
  CHECK(s->center == 2);
  REQUIRE(s->legs.size() == 3);
  CHECK(s->legs[0] == std::vector<int>{1, 0});
  CHECK(s->legs[1] == std::vector<int>{3, 4});
  CHECK(s->legs[2] == std::vector<int>{5});
}

TEST_CASE("caterpillar classifies as comb") {
  // spine 0-1-2-3 with teeth at 1 (4) and 2 (5-6). Two branch vertices,
  // so not a spider.
  auto g = testutil::make_graph({0, 0, 0, 0, 0, 0, 0},
                                {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {5, 6}});
  CHECK(classify(g) == GraphClass::Comb);
  auto c = conset::comb_structure(g);
  REQUIRE(c.has_value());
  CHECK(c->spine == std::vector<int>{0, 1, 2, 3});
  REQUIRE(c->teeth.size() == 4);
  CHECK(c->teeth[0].empty());
  CHECK(c->teeth[1] == std::vector<int>{4});
  CHECK(c->teeth[2] == std::vector<int>{5, 6});
  CHECK(c->teeth[3].empty());
}

TEST_CASE("two teeth on one vertex is not a comb") {
  // vertex 1 has degree 4, so any spine leaves it two pendant paths; a
  // second branch vertex (2) rules out the spider reading.
  auto g = testutil::make_graph({0, 0, 0, 0, 0, 0, 0},
                                {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  CHECK_FALSE(conset::comb_structure(g).has_value());
  CHECK_FALSE(conset::spider_structure(g).has_value());
  CHECK(classify(g) == GraphClass::Tree);
}

TEST_CASE("spiders beat combs in classification order") {
  // Three legs from one center is a spider even though a comb layout exists.
  auto g = testutil::make_graph({0, 0, 0, 0, 0, 0, 0},
                                {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(conset::comb_structure(g).has_value());
  CHECK(classify(g) == GraphClass::Spider);
}

TEST_CASE("general graphs") {
  auto g = testutil::cycle_graph({0, 0, 0, 0});
  conset::ColoredGraph h = g;
  h.add_edge(0, 2);
  CHECK(classify(h) == GraphClass::General);
  CHECK_FALSE(conset::is_tree(h));
  CHECK_FALSE(conset::path_structure(h).has_value());
  CHECK_FALSE(conset::cycle_structure(h).has_value());
}

TEST_CASE("path and cycle structure orderings") {
  // path 3-0-2-1: endpoints 3 and 1, starts at 1.
  auto g = testutil::make_graph({0, 0, 0, 0}, {{3, 0}, {0, 2}, {2, 1}});
  auto p = conset::path_structure(g);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<int>{1, 2, 0, 3});

  auto c = testutil::cycle_graph({0, 0, 0, 0});
  auto cs = conset::cycle_structure(c);
  REQUIRE(cs.has_value());
  CHECK(*cs == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("generated shapes classify as requested") {
  conset::Rng rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 7 + static_cast<int>(rng.below(8));
    CHECK(classify(conset::random_path(rng, n, 2)) == GraphClass::Path);
    CHECK(classify(conset::random_cycle(rng, n, 2)) == GraphClass::Cycle);
    CHECK(classify(conset::random_spider(rng, n, 2)) == GraphClass::Spider);
    auto comb = conset::random_comb(rng, n, 2);
    auto cls = classify(comb);
    // A comb degenerates to a path/spider for some shapes; never worse.
    CHECK(cls != GraphClass::Tree);
    CHECK(cls != GraphClass::General);
    CHECK(conset::is_tree(conset::random_tree(rng, n, 2)));
  }
}

TEST_CASE("structure survives relabeling") {
  // A comb can decompose in more than one way (a tooth next to a spine end
  // can trade places with it), so tooth lengths are not comparable across
  // labelings. What must hold: the relabeled graph is still recognized, and
  // the reported decomposition really describes it.
  auto edges_of = [](const conset::ColoredGraph& g) {
    std::set<std::pair<int, int>> s;
    for (const auto& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return s;
  };
  conset::Rng rng(123);
  for (int iter = 0; iter < 20; ++iter) {
    auto g = conset::random_comb(rng, 12, 3);
    auto perm = conset::random_permutation(rng, g.n());
    auto h = conset::relabel(g, perm);
    auto c = conset::comb_structure(h);
    REQUIRE(c.has_value());
    REQUIRE(c->teeth.size() == c->spine.size());
    CHECK(c->teeth.front().empty());
    CHECK(c->teeth.back().empty());

    std::set<std::pair<int, int>> implied;
    std::vector<int> seen;
    for (size_t i = 0; i < c->spine.size(); ++i) {
      seen.push_back(c->spine[i]);
      if (i + 1 < c->spine.size()) {
        implied.insert({std::min(c->spine[i], c->spine[i + 1]),
                        std::max(c->spine[i], c->spine[i + 1])});
      }
      int prev = c->spine[i];
      for (int v : c->teeth[i]) {
        seen.push_back(v);
        implied.insert({std::min(prev, v), std::max(prev, v)});
        prev = v;
      }
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(h.n());
    std::iota(all.begin(), all.end(), 0);
    CHECK(seen == all);            // spine and teeth partition the vertices
    CHECK(implied == edges_of(h)); // and account for every edge
  }
}
