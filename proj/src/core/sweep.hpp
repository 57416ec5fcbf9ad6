// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

namespace dpg {

struct SweepOptions {
  int min_n = 2;
  int max_n = 7;
  std::uint64_t seed = 1;
  int threads = 0;            // 0 = DP_THREADS env, else hardware concurrency
  std::string catalog_path;   // optional graph6 file replacing exhaustive enumeration
};

struct SweepOutcome {
  nlohmann::json report;
  std::uint64_t violations = 0;  // counterexamples to proved statements (bugs)
  std::uint64_t findings = 0;    // counterexamples to open conjectures (results)
};

// Suites: lemma-w4s, prop-sdp, thm-4chordal, thm-kri, thm-decomp,
// cor-pathjoin, thm-ckl, cor-dp-not-sdp. Throws UnknownSuite.
SweepOutcome run_theorem_suite(std::string_view name, const SweepOptions& options);

// Suites: min-degree-half, nussbaum-two-thirds, dp-fraction.
SweepOutcome run_conjecture_suite(std::string_view name, const SweepOptions& options);

int resolve_thread_count(int requested);

}  // namespace dpg
