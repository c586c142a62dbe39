#include <algorithm>
#include <set>
#include <vector>

#include "conset/classify.hpp"
#include "conset/generators.hpp"
#include "doctest.h"
#include "test_util.hpp"

using conset::Rng;

TEST_CASE("below stays in range and range hits its ends") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    int v = rng.below(7);
    CHECK(v >= 0);
    CHECK(v < 7);
  }
  std::set<int> seen;
  for (int i = 0; i < 200; ++i) seen.insert(rng.range(3, 5));
  CHECK(seen == std::set<int>{3, 4, 5});
  CHECK(rng.below(1) == 0);
}

TEST_CASE("same seed, same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 50; ++i) REQUIRE(a.next() == b.next());
}

TEST_CASE("generated graphs reproduce byte for byte") {
  for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) {
    Rng a(seed), b(seed);
    CHECK(conset::random_tree(a, 15, 3).to_json() == conset::random_tree(b, 15, 3).to_json());
    CHECK(conset::random_comb(a, 12, 2).to_json() == conset::random_comb(b, 12, 2).to_json());
    CHECK(conset::random_connected(a, 10, 3, 4).to_json() ==
          conset::random_connected(b, 10, 3, 4).to_json());
    auto ga = conset::random_cycle(a, 8, 2);
    auto gb = conset::random_cycle(b, 8, 2);
    CHECK(conset::with_random_weights(a, ga, 1, 5).to_json() ==
          conset::with_random_weights(b, gb, 1, 5).to_json());
  }
}

TEST_CASE("shapes come out as asked") {
  Rng rng(2718);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 8 + rng.below(10);
    CHECK(conset::path_structure(conset::random_path(rng, n, 2)).has_value());
    CHECK(conset::cycle_structure(conset::random_cycle(rng, n, 2)).has_value());

    auto s = conset::spider_structure(conset::random_spider(rng, n, 2));
    REQUIRE(s.has_value());
    CHECK(s->legs.size() >= 3);

    auto comb = conset::random_comb(rng, n, 2);
    auto cs = conset::comb_structure(comb);
    REQUIRE(cs.has_value());

    CHECK(conset::is_tree(conset::random_tree(rng, n, 2)));
    CHECK(conset::random_connected(rng, n, 2, 3).is_connected());
  }
}

TEST_CASE("fixed leg and tooth counts are honored") {
  Rng rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    auto g = conset::random_spider(rng, 12, 2, 4);
    auto s = conset::spider_structure(g);
    REQUIRE(s.has_value());
    CHECK(s->legs.size() == 4);

    auto c = conset::random_comb(rng, 14, 2, 3);
    auto cs = conset::comb_structure(c);
    REQUIRE(cs.has_value());
    int nonempty = 0;
    for (const auto& t : cs->teeth) nonempty += t.empty() ? 0 : 1;
    CHECK(nonempty >= 3);
  }
}

TEST_CASE("colors respect the requested palette") {
  Rng rng(9);
  auto g = conset::random_tree(rng, 30, 3);
  CHECK(*std::max_element(g.colors().begin(), g.colors().end()) <= 2);
  CHECK(*std::min_element(g.colors().begin(), g.colors().end()) >= 0);
  auto mono = conset::random_path(rng, 10, 1);
  CHECK(*std::max_element(mono.colors().begin(), mono.colors().end()) == 0);
}

TEST_CASE("weights land in the window") {
  Rng rng(77);
  auto g = conset::with_random_weights(rng, conset::random_tree(rng, 20, 2), 2, 6);
  CHECK(g.weighted());
  for (const auto& e : g.edges()) {
    CHECK(e.w >= 2);
    CHECK(e.w <= 6);
  }
}

TEST_CASE("permutations permute and relabel keeps structure") {
  Rng rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 1 + rng.below(15);
    auto p = conset::random_permutation(rng, n);
    std::set<int> s(p.begin(), p.end());
    REQUIRE(static_cast<int>(s.size()) == n);
    REQUIRE(*s.begin() == 0);
    REQUIRE(*s.rbegin() == n - 1);
  }

  auto g = conset::random_comb(rng, 10, 3);
  auto perm = conset::random_permutation(rng, g.n());
  auto h = conset::relabel(g, perm);
  h.validate();
  CHECK(h.edges().size() == g.edges().size());
  for (int v = 0; v < g.n(); ++v) CHECK(h.color(perm[v]) == g.color(v));
  // degree multiset survives
  auto degs = [](const conset::ColoredGraph& x) {
    std::vector<int> d(x.n(), 0);
    for (const auto& e : x.edges()) {
      d[e.u]++;
      d[e.v]++;
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  CHECK(degs(g) == degs(h));
}

TEST_CASE("extra edges cap at the simple-graph limit") {
  Rng rng(21);
  auto g = conset::random_connected(rng, 4, 2, 100);
  CHECK(g.edges().size() <= 6);
  g.validate();
  CHECK(g.is_connected());
}
