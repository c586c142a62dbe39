#include <stdexcept>
#include <string>
#include <vector>

#include "conset/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using conset::ColoredGraph;

TEST_CASE("validate rejects malformed graphs") {
  CHECK_THROWS_AS(ColoredGraph(3, {0, 1}), std::invalid_argument);

  ColoredGraph self(2, {0, 0});
  self.add_edge(0, 0);
  CHECK_THROWS_AS(self.validate(), std::invalid_argument);

  ColoredGraph range(2, {0, 0});
  range.add_edge(0, 2);
  CHECK_THROWS_AS(range.validate(), std::invalid_argument);

  ColoredGraph dup(3, {0, 0, 0});
  dup.add_edge(0, 1);
  dup.add_edge(1, 0);
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

  ColoredGraph negcol(1, {-1});
  CHECK_THROWS_AS(negcol.validate(), std::invalid_argument);

  ColoredGraph badw(2, {0, 0}, true);
  badw.add_edge(0, 1, 0);
  CHECK_THROWS_AS(badw.validate(), std::invalid_argument);

  // weight != 1 only allowed when the graph says it is weighted
  ColoredGraph unw(2, {0, 0}, false);
  unw.add_edge(0, 1, 3);
  CHECK_THROWS_AS(unw.validate(), std::invalid_argument);
}

TEST_CASE("adjacency carries weights") {
  ColoredGraph g(3, {0, 1, 0}, true);
  g.add_edge(0, 1, 4);
  g.add_edge(1, 2, 1);
  g.validate();
  auto a0 = g.adj(0);
  REQUIRE(a0.size() == 1);
  CHECK(a0[0].first == 1);
  CHECK(a0[0].second == 4);
  CHECK(g.adj(1).size() == 2);
}

TEST_CASE("is_connected") {
  CHECK(testutil::path_graph({0, 1, 0}).is_connected());
  ColoredGraph g(3, {0, 0, 0});
  g.add_edge(0, 1);
  CHECK_FALSE(g.is_connected());
  CHECK(ColoredGraph(1, {0}).is_connected());
}

TEST_CASE("serialization is canonical regardless of edge insertion order") {
  ColoredGraph a(4, {0, 1, 1, 0});
  a.add_edge(2, 3);
  a.add_edge(1, 0);
  a.add_edge(1, 2);
  ColoredGraph b(4, {0, 1, 1, 0});
  b.add_edge(0, 1);
  b.add_edge(3, 2);
  b.add_edge(2, 1);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("serialization round trip") {
  ColoredGraph g(5, {0, 1, 2, 1, 0}, true);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2, 5);
  g.add_edge(2, 3, 1);
  g.add_edge(3, 4, 2);
  g.add_edge(4, 0, 3);
  g.validate();
  auto text = g.to_json();
  ColoredGraph back = ColoredGraph::from_json(text);
  CHECK(back.n() == g.n());
  CHECK(back.colors() == g.colors());
  CHECK(back.weighted() == g.weighted());
  CHECK(back.to_json() == text);
}

TEST_CASE("serialized bytes are stable") {
  ColoredGraph g(2, {0, 1});
  g.add_edge(0, 1);
  const std::string expect =
      "{\n"
      "  \"n\": 2,\n"
      "  \"weighted\": false,\n"
      "  \"colors\": [\n"
      "    0,\n"
      "    1\n"
      "  ],\n"
      "  \"edges\": [\n"
      "    [\n"
      "      0,\n"
      "      1\n"
      "    ]\n"
      "  ]\n"
      "}\n";
  CHECK(g.to_json() == expect);
}

TEST_CASE("from_json rejects garbage") {
  CHECK_THROWS(ColoredGraph::from_json("not json"));
  CHECK_THROWS(ColoredGraph::from_json("{\"n\": 2}"));
}
