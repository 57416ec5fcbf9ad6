// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/codec.hpp"
#include "core/families.hpp"
#include "core/isometry.hpp"
#include "core/report.hpp"
#include "core/simplicial.hpp"
#include "oracle.hpp"

using namespace dpg;

namespace {

VertexSet set_from(const nlohmann::json& vertices) {
  VertexSet s;
  for (int v : vertices.get<std::vector<int>>()) s = s.with(v);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("every certificate in an analysis re-verifies") {
  const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  for (const Graph& g : {cycle(5), cycle(6), nonchordal_sdp_example(), path(6), bowtie}) {
    const auto report = analyze(g, {});
    CHECK(report["schema"].get<int>() == 1);
    CHECK(parse_graph6(report["id"].get<std::string>()) == g);

    // dp witnesses
    for (const auto& [order, witness] : report["dp_witnesses"].items()) {
      const VertexSet s = set_from(witness);
      CHECK(s.count() == std::stoi(order));
      CHECK(is_isometric(g, s));
    }
    // ddp is exactly the set of witnessed orders
    std::vector<int> witnessed;
    for (const auto& [order, witness] : report["dp_witnesses"].items())
      witnessed.push_back(std::stoi(order));
    std::sort(witnessed.begin(), witnessed.end());
    CHECK(witnessed == report["ddp"].get<std::vector<int>>());

    // sdp ordering
    if (report["is_sdp"].get<bool>()) {
      const auto order = report["sdp_ordering"].get<std::vector<int>>();
      CHECK(verify_sdp_ordering(g, order));
    } else {
      CHECK_FALSE(report.contains("sdp_ordering"));
    }

    // induced-cycle witness
    if (!report["acyclic"].get<bool>()) {
      const auto witness = report["induced_cycle_witness"].get<std::vector<int>>();
      CHECK(static_cast<int>(witness.size()) == report["longest_induced_cycle"].get<int>());
      CHECK(oracle::induces_cycle(g, witness));
    }
  }
}

TEST_CASE("analysis gates and skips") {
  CHECK_THROWS_AS(analyze(Graph(3, {{0, 1}}), {}), Error);
  const Graph big = path(25);
  CHECK_THROWS_AS(analyze(big, {}), Error);
  const auto skipped = analyze(big, {true, false});
  CHECK(skipped.contains("skipped_stages"));
  CHECK_FALSE(skipped.contains("ddp"));
  const auto forced = analyze(path(21), {false, true});
  CHECK(forced["is_dp"].get<bool>());  // paths are chordal, hence dp
}

TEST_CASE("decomposition report cross-checks itself") {
  const Graph caterpillar(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {5, 6}});
  const auto report = decompose_report(caterpillar, false);
  CHECK(report["verified"].get<bool>());
  CHECK(report["ddp"] == report["brute_force_ddp"]);
  CHECK(report["tree"]["kind"].get<std::string>() == "split");
  CHECK_THROWS_AS(decompose_report(Graph(2, {}), false), Error);
}

TEST_SUITE_END();
