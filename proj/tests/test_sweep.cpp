// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/graph.hpp"
#include "core/sweep.hpp"

using namespace dpg;

namespace {

SweepOptions small_bounds(int max_n) {
  SweepOptions opt;
  opt.max_n = max_n;
  opt.threads = 2;
  return opt;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("theorem suites are clean on small catalogs") {
  for (const char* name : {"lemma-w4s", "prop-sdp", "thm-4chordal", "thm-kri", "thm-decomp"}) {
    CAPTURE(name);
    const auto outcome = run_theorem_suite(name, small_bounds(5));
    CHECK(outcome.violations == 0);
    CHECK(outcome.report["counts"]["graphs"].get<std::uint64_t>() == 771);  // 1+4+38+728
    CHECK(outcome.report["seed"].get<std::uint64_t>() == 1);
    CHECK(outcome.report["schema"].get<int>() == 1);
  }
}

TEST_CASE("path join suite and its probe") {
  const auto outcome = run_theorem_suite("cor-pathjoin", small_bounds(5));
  CHECK(outcome.violations == 0);
  CHECK(outcome.report["counts"]["instances"].get<std::uint64_t>() == 588);
  CHECK(outcome.report["probe"]["order"].get<int>() == 7);
  CHECK(outcome.report["probe"]["ddp"].get<std::vector<int>>() ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(outcome.report["probe"]["ddp"] == outcome.report["probe"]["brute_force_ddp"]);
}

TEST_CASE("attached-cycle suite") {
  const auto outcome = run_theorem_suite("thm-ckl", small_bounds(7));
  CHECK(outcome.violations == 0);  // the missing-order check never fires
  CHECK(outcome.report["counts"]["members"].get<std::uint64_t>() == 2890);
  // Every member with at least one attachment does have an isometric
  // subgraph at the literal order floor(k/2)+2; only the five bare cycles
  // lack one. Kept as recorded findings, not violations.
  CHECK(outcome.report["counts"]["literal_order_witnesses"].get<std::uint64_t>() == 2885);

  SUBCASE("converse instance is found deterministically") {
    const auto converse = outcome.report["converse_instance"];
    REQUIRE(converse["found"].get<bool>());
    CHECK(converse["k"].get<int>() == 10);
    CHECK(converse["l"].get<int>() == 3);
    CHECK(converse["spec_index"].get<std::uint64_t>() == 103);
    const auto ddp = converse["ddp"].get<std::vector<int>>();
    CHECK(ddp == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13});  // order 9 missing
  }
  SUBCASE("same seed reproduces the sweep") {
    const auto again = run_theorem_suite("thm-ckl", small_bounds(7));
    CHECK(again.report["counts"] == outcome.report["counts"]);
    CHECK(again.report["converse_instance"] == outcome.report["converse_instance"]);
  }
}

TEST_CASE("corollary classification cells") {
  const auto outcome = run_theorem_suite("cor-dp-not-sdp", small_bounds(6));
  CHECK(outcome.violations == 0);
  const auto& counts = outcome.report["counts"];
  const auto dp_and_sdp = counts["dp_and_sdp"].get<std::uint64_t>();
  const auto dp_not_sdp = counts["dp_not_sdp"].get<std::uint64_t>();
  const auto non_dp = counts["non_dp"].get<std::uint64_t>();
  CHECK(dp_and_sdp == 26323);
  CHECK(dp_not_sdp == 1080);
  CHECK(non_dp == 72);  // the labeled 5- and 6-cycles
  CHECK(dp_and_sdp + dp_not_sdp + non_dp == counts["graphs"].get<std::uint64_t>());
}

TEST_CASE("conjecture suites") {
  SUBCASE("open half-degree conjecture has no small counterexample") {
    const auto outcome = run_conjecture_suite("min-degree-half", small_bounds(6));
    CHECK(outcome.violations == 0);
    CHECK(outcome.findings == 0);
    CHECK(outcome.report["proved"].get<bool>() == false);
  }
  SUBCASE("proved two-thirds bound holds") {
    const auto outcome = run_conjecture_suite("nussbaum-two-thirds", small_bounds(6));
    CHECK(outcome.violations == 0);
    CHECK(outcome.report["proved"].get<bool>() == true);
  }
  SUBCASE("dp fraction fixture") {
    const auto outcome = run_conjecture_suite("dp-fraction", small_bounds(6));
    const auto per_order = outcome.report["per_order"];
    REQUIRE(per_order.size() == 5);  // n = 2..6
    CHECK(per_order[3]["n"].get<int>() == 5);
    CHECK(per_order[3]["graphs"].get<std::uint64_t>() == 728);
    CHECK(per_order[3]["dp"].get<std::uint64_t>() == 716);  // the 12 labeled 5-cycles are not dp
    CHECK(per_order[4]["n"].get<int>() == 6);
    CHECK(per_order[4]["graphs"].get<std::uint64_t>() == 26704);
    CHECK(per_order[4]["dp"].get<std::uint64_t>() == 26644);  // the 60 labeled 6-cycles are not dp
  }
}

TEST_CASE("file catalogs") {
  SweepOptions opt = small_bounds(7);
  opt.catalog_path = "tests/data/catalog3.g6";
  const auto outcome = run_theorem_suite("lemma-w4s", opt);
  CHECK(outcome.violations == 0);
  CHECK(outcome.report["counts"]["graphs"].get<std::uint64_t>() == 2);  // K1 filtered by min_n=2

  SweepOptions bad = small_bounds(7);
  bad.catalog_path = "tests/data/bad_catalog.g6";
  CHECK_THROWS_AS(run_theorem_suite("lemma-w4s", bad), Error);
  try {
    run_theorem_suite("lemma-w4s", bad);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("record 2") != std::string::npos);
  }
}

TEST_CASE("unknown suites") {
  CHECK_THROWS_AS(run_theorem_suite("thm-nope", small_bounds(4)), Error);
  CHECK_THROWS_AS(run_conjecture_suite("nope", small_bounds(4)), Error);
  try {
    run_theorem_suite("thm-nope", small_bounds(4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
}

TEST_SUITE_END();
