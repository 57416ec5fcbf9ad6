// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "core/codec.hpp"
#include "core/families.hpp"

using namespace dpg;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.35);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("codec");

TEST_CASE("edge list format") {
  CHECK(emit_edgelist(path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(parse_edgelist("3 2\n0 1\n1 2\n") == path(3));
  CHECK(parse_edgelist("1 0\n") == Graph(1, {}));
  CHECK(parse_edgelist("  3   2\n0 1\n1 2") == path(3));  // whitespace tolerant

  SUBCASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_edgelist(""), Error);
    CHECK_THROWS_AS(parse_edgelist("3"), Error);
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n"), Error);        // missing edge
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 1\n1 2\n"), Error);   // trailing edge
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 5\n"), Error);        // endpoint range
    CHECK_THROWS_AS(parse_edgelist("3 1\n1 1\n"), Error);        // self loop
    CHECK_THROWS_AS(parse_edgelist("0 0\n"), Error);
    CHECK_THROWS_AS(parse_edgelist("3 x\n"), Error);
    try {
      parse_edgelist("3 2\n0 1\n1 9\n");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(e.offset() == 8);  // start of the offending edge line
    }
  }
}

TEST_CASE("graph6 format") {
  CHECK(emit_graph6(Graph(1, {})) == "@");
  CHECK(parse_graph6("@") == Graph(1, {}));
  // K2: n=2 header 'A', single bit 1 -> chunk 100000 -> '_'
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6(">>graph6<<A_") == complete(2));

  SUBCASE("long-order header kicks in above 62 vertices") {
    const Graph g(63, {{0, 62}});
    const std::string rec = emit_graph6(g);
    CHECK(rec[0] == '~');
    CHECK(parse_graph6(rec) == g);
    const Graph g64(64, {{0, 63}, {1, 2}});
    CHECK(parse_graph6(emit_graph6(g64)) == g64);
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("D"), Error);      // truncated: n=5 needs body bytes
    CHECK_THROWS_AS(parse_graph6("A_X"), Error);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x1f"), Error);  // byte below printable range
    CHECK_THROWS_AS(parse_graph6("~~????"), Error); // order beyond the cap
    CHECK_THROWS_AS(parse_graph6("A`"), Error);     // nonzero padding for n=2
  }
}

TEST_CASE("round trips on seeded random graphs") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 20), rng);
    CHECK(parse_edgelist(emit_edgelist(g)) == g);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("format dispatch") {
  CHECK(parse_graph("3 2\n0 1\n1 2\n", "edgelist") == path(3));
  CHECK(parse_graph("A_\n", "graph6") == complete(2));
  CHECK(format_graph(complete(2), "graph6") == "A_");
  CHECK_THROWS_AS(parse_graph("x", "dimacs"), Error);
  CHECK_THROWS_AS(parse_graph("A_\nA_\n", "graph6"), Error);
}

TEST_SUITE_END();
