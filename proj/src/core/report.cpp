// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/report.hpp"

#include <chrono>

#include "core/codec.hpp"
#include "core/decomposition.hpp"
#include "core/isometry.hpp"
#include "core/simplicial.hpp"

namespace dpg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json vertex_list(VertexSet s) { return s.to_vector(); }

}  // namespace

nlohmann::json analyze(const Graph& g, const AnalyzeOptions& options) {
  if (!is_connected(g)) {
    int components = 0;
    std::uint64_t left = g.full_mask();
    while (left) {
      left &= ~reach_within(g, left, std::countr_zero(left));
      ++components;
    }
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected (" + std::to_string(components) + " components)");
  }
  const bool run_exponential = !options.skip_exponential;
  if (run_exponential && g.order() > kProfileOrderCap && !options.force)
    throw Error(ErrorCode::TooLarge,
                "order " + std::to_string(g.order()) + " exceeds the dp-profile cap of " +
                    std::to_string(kProfileOrderCap) + "; pass force or skip the profile");

  nlohmann::json report;
  report["schema"] = 1;
  report["id"] = emit_graph6(g);
  report["order"] = g.order();
  report["size"] = g.size();
  report["connected"] = true;
  report["min_degree"] = min_degree(g);
  nlohmann::json timing;

  {
    const auto start = Clock::now();
    report["cut_vertices"] = vertex_list(cut_vertices(g));
    timing["cut_vertices_ms"] = ms_since(start);
  }

  if (run_exponential) {
    {
      const auto start = Clock::now();
      const DpProfile profile = dp_profile(g);
      report["ddp"] = profile.ddp().to_vector();
      report["is_dp"] = profile.is_dp();
      nlohmann::json witnesses = nlohmann::json::object();
      for (int i = 1; i <= profile.order; ++i)
        if (profile.witness[i - 1]) witnesses[std::to_string(i)] = vertex_list(*profile.witness[i - 1]);
      report["dp_witnesses"] = witnesses;
      timing["dp_profile_ms"] = ms_since(start);
    }
    {
      const auto start = Clock::now();
      const auto ordering = find_sdp_ordering(g);
      report["is_sdp"] = ordering.has_value();
      if (ordering) report["sdp_ordering"] = ordering->order;
      timing["sdp_ms"] = ms_since(start);
    }
    {
      const auto start = Clock::now();
      const ChordalityReport chord = chordality(g);
      report["longest_induced_cycle"] = chord.longest_induced_cycle;
      report["acyclic"] = chord.acyclic;
      if (chord.witness) report["induced_cycle_witness"] = vertex_list(*chord.witness);
      timing["chordality_ms"] = ms_since(start);
    }
  } else {
    report["skipped_stages"] = {"dp_profile", "sdp", "chordality"};
  }

  report["timing"] = timing;
  return report;
}

namespace {

nlohmann::json split_tree(const Graph& g, VertexSet piece) {
  nlohmann::json node;
  node["vertices"] = piece.to_vector();
  const auto sub = induced_subgraph(g, piece);
  const VertexSet cuts_local = cut_vertices(sub.graph);
  if (cuts_local.empty() || piece.count() < 3) {
    node["kind"] = "leaf";
    return node;
  }
  const int x = sub.new_to_old[cuts_local.lowest()];
  const auto local = split_at_cut_vertex(sub.graph, sub.old_to_new[x]);
  VertexSet left, right;
  for (int v : local.left) left = left.with(sub.new_to_old[v]);
  for (int v : local.right) right = right.with(sub.new_to_old[v]);
  node["kind"] = "split";
  node["cut_vertex"] = x;
  node["left"] = split_tree(g, left);
  node["right"] = split_tree(g, right);
  return node;
}

}  // namespace

nlohmann::json decompose_report(const Graph& g, bool force) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  nlohmann::json report;
  report["schema"] = 1;
  report["id"] = emit_graph6(g);
  report["order"] = g.order();
  report["cut_vertices"] = vertex_list(cut_vertices(g));
  const auto start = Clock::now();
  report["ddp"] = ddp_via_decomposition(g).to_vector();
  report["decomposition_ms"] = ms_since(start);
  report["tree"] = split_tree(g, g.vertices());
  if (g.order() <= kProfileOrderCap || force) {
    const auto brute_start = Clock::now();
    const SizeSet brute = dp_profile(g).ddp();
    report["brute_force_ddp"] = brute.to_vector();
    report["brute_force_ms"] = ms_since(brute_start);
    report["verified"] = (brute.to_vector() == report["ddp"].get<std::vector<int>>());
  }
  return report;
}

}  // namespace dpg
