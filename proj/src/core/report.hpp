// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "core/graph.hpp"

namespace dpg {

struct AnalyzeOptions {
  bool skip_exponential = false;  // omit dp profile, ordering search, chordality
  bool force = false;             // run the exponential stages regardless of order
};

// dp profile enumeration is practical up to this order; the CLI refuses
// larger inputs unless forced or asked to skip.
constexpr int kProfileOrderCap = 20;
constexpr int kProfileWarnOrder = 16;

// Full analysis with re-verifiable certificates (witness sets, orderings).
// Throws TooLarge for graphs beyond the cap unless skipping or forcing, and
// Disconnected for disconnected input.
nlohmann::json analyze(const Graph& g, const AnalyzeOptions& options);

// Cut-vertex decomposition report: split tree, composed ddp, and (within the
// cap, or when forced) the brute-force cross-check.
nlohmann::json decompose_report(const Graph& g, bool force);

}  // namespace dpg
