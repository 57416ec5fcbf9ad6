// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>

#include "core/families.hpp"
#include "core/isometry.hpp"
#include "core/simplicial.hpp"
#include "oracle.hpp"

using namespace dpg;

namespace {

std::set<int> as_set(SizeSet s) {
  const auto v = s.to_vector();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE_BEGIN("isometry");

TEST_CASE("is_isometric basics") {
  const Graph c5 = cycle(5);
  CHECK(is_isometric(c5, VertexSet(0b00111)));       // consecutive arc
  CHECK_FALSE(is_isometric(c5, VertexSet(0b01111))); // any 4 of C5 induce P4
  CHECK(is_isometric(c5, c5.vertices()));
  CHECK_THROWS_AS(is_isometric(c5, VertexSet()), Error);

  SUBCASE("agrees with the naive oracle on random graphs") {
    std::mt19937_64 rng(21);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) edges.emplace_back(i, j);
      const Graph g(n, edges);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        REQUIRE(is_isometric(g, VertexSet(mask)) ==
                oracle::is_isometric(g, VertexSet(mask).to_vector()));
      }
    }
  }
}

TEST_CASE("find_isometric_of_order") {
  const Graph c5 = cycle(5);
  CHECK_FALSE(find_isometric_of_order(c5, 4).has_value());
  CHECK(find_isometric_of_order(c5, 5) == c5.vertices());

  const Graph c6 = cycle(6);
  const auto w = find_isometric_of_order(c6, 4);
  REQUIRE(w.has_value());
  CHECK(is_isometric(c6, *w));
  // a consecutive 4-arc of C6 is isometric; the lexicographically first
  // witness is {0,1,2,3}
  CHECK(*w == VertexSet(0b001111));

  CHECK_THROWS_AS(find_isometric_of_order(c5, 0), Error);
  CHECK_THROWS_AS(find_isometric_of_order(c5, 6), Error);
}

TEST_CASE("dp profiles of the small fixtures") {
  const auto c5 = dp_profile(cycle(5));
  CHECK(as_set(c5.ddp()) == std::set<int>{1, 2, 3, 5});
  CHECK_FALSE(c5.is_dp());
  CHECK(as_set(c5.ddp()) == oracle::ddp(cycle(5)));

  const auto c6 = dp_profile(cycle(6));
  CHECK(as_set(c6.ddp()) == std::set<int>{1, 2, 3, 4, 6});
  CHECK_FALSE(c6.is_dp());
  CHECK(as_set(c6.ddp()) == oracle::ddp(cycle(6)));

  const auto k4 = dp_profile(complete(4));
  CHECK(as_set(k4.ddp()) == std::set<int>{1, 2, 3, 4});
  CHECK(k4.is_dp());
  CHECK(is_dp(complete(4)));

  CHECK_THROWS_AS(dp_profile(Graph(2, {})), Error);

  SUBCASE("witnesses re-verify and cover 1 and n") {
    for (const Graph& g : {cycle(5), cycle(6), complete(4), path(5)}) {
      const auto profile = dp_profile(g);
      REQUIRE(profile.witness[0].has_value());
      REQUIRE(profile.witness[g.order() - 1].has_value());
      for (int i = 1; i <= g.order(); ++i) {
        if (!profile.witness[i - 1]) continue;
        REQUIRE(profile.witness[i - 1]->count() == i);
        REQUIRE(is_isometric(g, *profile.witness[i - 1]));
      }
    }
  }
}

TEST_CASE("ddp is not downward closed: C6 skips 5") {
  const auto profile = dp_profile(cycle(6));
  CHECK(profile.witness[5].has_value());
  CHECK_FALSE(profile.witness[4].has_value());
  CHECK(profile.witness[3].has_value());
}

TEST_CASE("constrained ddp") {
  const Graph k3 = complete(3);
  CHECK(as_set(ddp_constrained(k3, {VertexSet(), VertexSet::single(0)}).sizes()) ==
        std::set<int>{1, 2, 3});
  CHECK(as_set(ddp_constrained(k3, {VertexSet::single(0), VertexSet()}).sizes()) ==
        std::set<int>{1, 2});
  CHECK(ddp_constrained(k3, {k3.vertices(), VertexSet()}).sizes().empty());

  CHECK_THROWS_AS(ddp_constrained(k3, {VertexSet::single(0), VertexSet::single(0)}), Error);

  SUBCASE("unconstrained equals the dp profile") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.5);
    int done = 0;
    while (done < 25) {
      const int n = 2 + static_cast<int>(rng() % 6);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) edges.emplace_back(i, j);
      const Graph g(n, edges);
      if (!is_connected(g)) continue;
      ++done;
      CHECK(ddp_constrained(g, {}).sizes() == dp_profile(g).ddp());
    }
  }
  SUBCASE("agrees with the naive oracle under constraints") {
    const Graph c5 = cycle(5);
    CHECK(as_set(ddp_constrained(c5, {VertexSet::single(2), VertexSet::single(4)}).sizes()) ==
          oracle::ddp_constrained(c5, {2}, {4}));
    const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(as_set(ddp_constrained(bowtie, {VertexSet(), VertexSet::single(2)}).sizes()) ==
          oracle::ddp_constrained(bowtie, {}, {2}));
    CHECK(as_set(ddp_constrained(bowtie, {VertexSet::single(2), VertexSet()}).sizes()) ==
          oracle::ddp_constrained(bowtie, {2}, {}));
  }
}

TEST_CASE("sdp implies dp on small connected graphs") {
  std::mt19937_64 rng(9);
  std::bernoulli_distribution coin(0.45);
  int done = 0;
  while (done < 40) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    const Graph g(n, edges);
    if (!is_connected(g)) continue;
    ++done;
    if (is_sdp(g)) CHECK(is_dp(g));
  }
}

TEST_CASE("high minimum degree forces dp") {
  // proved bound: min degree >= ceil(2n/3) - 1
  std::mt19937_64 rng(13);
  std::bernoulli_distribution coin(0.85);
  int done = 0;
  while (done < 40) {
    const int n = 4 + static_cast<int>(rng() % 5);  // up to n = 8
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    const Graph g(n, edges);
    if (!is_connected(g)) continue;
    if (min_degree(g) < (2 * n + 2) / 3 - 1) continue;
    ++done;
    CHECK(is_dp(g));
  }
}

TEST_SUITE_END();
