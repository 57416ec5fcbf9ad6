// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "core/families.hpp"
#include "core/graph.hpp"

using namespace dpg;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("graph core");

TEST_CASE("build") {
  const Graph k1(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph c5 = cycle(5);
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  CHECK(c5.has_edge(4, 0));

  SUBCASE("duplicate edges collapse") {
    const Graph p3(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(p3.size() == 2);
    CHECK(p3 == path(3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph(0, {}), Error);
    CHECK_THROWS_AS(Graph(65, {}), Error);
    CHECK(Graph(64, {}).order() == 64);
  }
}

TEST_CASE("apsp") {
  const DistanceMatrix d5 = apsp(cycle(5));
  CHECK(d5(0, 2) == 2);
  CHECK(d5(0, 3) == 2);
  CHECK(d5(0, 0) == 0);

  const DistanceMatrix dp4 = apsp(path(4));
  CHECK(dp4(0, 3) == 3);

  SUBCASE("disconnected pairs get the sentinel") {
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    const DistanceMatrix d = apsp(two_edges);
    CHECK(d(0, 2) == DistanceMatrix::kUnreachable);
    CHECK(d(0, 1) == 1);
  }
}

TEST_CASE("apsp symmetry and triangle inequality on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 11), 0.4, rng);
    const DistanceMatrix d = apsp(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      REQUIRE(d(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        REQUIRE(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < n; ++w) {
          if (d(u, v) < 0 || d(v, w) < 0 || d(u, w) < 0) continue;
          REQUIRE(d(u, w) <= d(u, v) + d(v, w));
        }
      }
    }
  }
}

TEST_CASE("induced subgraph") {
  const Graph c5 = cycle(5);
  SUBCASE("consecutive arc gives a path") {
    const auto sub = induced_subgraph(c5, VertexSet(0b01110));
    CHECK(sub.graph == path(3));
    CHECK(sub.new_to_old == std::vector<int>{1, 2, 3});
    CHECK(sub.old_to_new[2] == 1);
    CHECK(sub.old_to_new[0] == -1);
  }
  SUBCASE("non-adjacent pair gives isolated vertices") {
    const auto sub = induced_subgraph(c5, VertexSet(0b01010));
    CHECK(sub.graph.size() == 0);
    CHECK(sub.graph.order() == 2);
  }
  SUBCASE("whole set is identity") {
    const auto sub = induced_subgraph(c5, c5.vertices());
    CHECK(sub.graph == c5);
  }
  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet()), Error);
}

TEST_CASE("graph power") {
  const Graph p4 = path(4);
  CHECK(graph_power(p4, 1) == p4);
  CHECK(graph_power(cycle(5), 2) == complete(5));
  const Graph p4sq = graph_power(p4, 2);
  CHECK(p4sq.size() == 5);
  CHECK(p4sq.has_edge(0, 2));
  CHECK(p4sq.has_edge(1, 3));
  CHECK_FALSE(p4sq.has_edge(0, 3));

  SUBCASE("powers at the diameter are complete") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 30) {
      const Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.45, rng);
      if (!is_connected(g)) continue;
      ++done;
      CHECK(graph_power(g, apsp(g).diameter()) == complete(g.order()));
    }
  }
  SUBCASE("unreachable pairs are never joined") {
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(graph_power(two_edges, 5) == two_edges);
  }
}

TEST_CASE("connectivity and cut vertices") {
  CHECK(is_connected(Graph(1, {})));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(cut_vertices(path(3)) == VertexSet::single(1));
  CHECK(cut_vertices(cycle(5)).empty());

  const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(cut_vertices(bowtie) == VertexSet::single(2));

  CHECK_THROWS_AS(cut_vertices(Graph(2, {})), Error);

  SUBCASE("matches the deletion definition") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 60) {
      const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.45, rng);
      if (!is_connected(g)) continue;
      ++done;
      const VertexSet cuts = cut_vertices(g);
      for (int v = 0; v < g.order(); ++v) {
        if (g.order() == 1) continue;
        const auto rest = induced_subgraph(g, g.vertices().without(v));
        REQUIRE(cuts.contains(v) == !is_connected(rest.graph));
      }
    }
  }
}

TEST_CASE("neighborhoods and degrees") {
  const Graph c5 = cycle(5);
  CHECK(neighborhood(c5, 0, false) == VertexSet(0b10010));
  CHECK(neighborhood(c5, 0, true) == VertexSet(0b10011));
  CHECK(min_degree(complete(4)) == 3);
  CHECK(min_degree(path(4)) == 1);
  CHECK_THROWS_AS(neighborhood(c5, 5, false), Error);
}

TEST_SUITE_END();
