// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "dpgraph/dpgraph.h"

#include <cstring>
#include <new>

#include "core/codec.hpp"
#include "core/decomposition.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/isometry.hpp"
#include "core/report.hpp"
#include "core/simplicial.hpp"
#include "core/sweep.hpp"

struct dpg_graph {
  dpg::Graph graph;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_offset = ~std::size_t{0};

dpg_status status_of(dpg::ErrorCode code) {
  using dpg::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return DPG_ERROR_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return DPG_ERROR_OUT_OF_RANGE;
    case ErrorCode::SelfLoop: return DPG_ERROR_SELF_LOOP;
    case ErrorCode::TooLarge: return DPG_ERROR_TOO_LARGE;
    case ErrorCode::EmptySet: return DPG_ERROR_EMPTY_SET;
    case ErrorCode::Disconnected: return DPG_ERROR_DISCONNECTED;
    case ErrorCode::NotCutVertex: return DPG_ERROR_NOT_CUT_VERTEX;
    case ErrorCode::OverlappingConstraint: return DPG_ERROR_OVERLAPPING_CONSTRAINT;
    case ErrorCode::InvalidSpec: return DPG_ERROR_INVALID_SPEC;
    case ErrorCode::Parse: return DPG_ERROR_PARSE;
    case ErrorCode::UnknownSuite: return DPG_ERROR_UNKNOWN_SUITE;
  }
  return DPG_ERROR_INTERNAL;
}

dpg_status capture_error() {
  g_last_error_offset = ~std::size_t{0};
  try {
    throw;
  } catch (const dpg::Error& e) {
    g_last_error = e.what();
    g_last_error_offset = e.offset();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPG_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DPG_ERROR_INTERNAL;
  }
}

template <typename Fn>
dpg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DPG_OK;
  } catch (...) {
    return capture_error();
  }
}

dpg_status require(bool condition, const char* message) {
  if (condition) return DPG_OK;
  g_last_error = message;
  g_last_error_offset = ~std::size_t{0};
  return DPG_ERROR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dpg::VertexSet checked_set(const dpg::Graph& g, std::uint64_t mask) {
  dpg::VertexSet set(mask);
  if (!set.subset_of(g.vertices()))
    throw dpg::Error(dpg::ErrorCode::OutOfRange, "vertex mask contains bits beyond the graph order");
  return set;
}

void write_ordering(const std::optional<dpg::EliminationOrdering>& ordering, int32_t* order_out,
                    int32_t* found) {
  *found = ordering.has_value();
  if (ordering && order_out)
    for (std::size_t i = 0; i < ordering->order.size(); ++i)
      order_out[i] = ordering->order[i];
}

}  // namespace

extern "C" {

const char* dpg_status_name(dpg_status status) {
  switch (status) {
    case DPG_OK: return "ok";
    case DPG_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case DPG_ERROR_OUT_OF_RANGE: return "out of range";
    case DPG_ERROR_SELF_LOOP: return "self loop";
    case DPG_ERROR_TOO_LARGE: return "too large";
    case DPG_ERROR_EMPTY_SET: return "empty set";
    case DPG_ERROR_DISCONNECTED: return "disconnected";
    case DPG_ERROR_NOT_CUT_VERTEX: return "not a cut vertex";
    case DPG_ERROR_OVERLAPPING_CONSTRAINT: return "overlapping constraint";
    case DPG_ERROR_INVALID_SPEC: return "invalid family spec";
    case DPG_ERROR_PARSE: return "parse error";
    case DPG_ERROR_UNKNOWN_SUITE: return "unknown suite";
    case DPG_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dpg_last_error(void) { return g_last_error.c_str(); }

size_t dpg_last_error_offset(void) { return g_last_error_offset; }

void dpg_graph_free(dpg_graph* g) { delete g; }

void dpg_string_free(char* s) { ::operator delete(s); }

dpg_status dpg_graph_build(int32_t n, const int32_t* edges, size_t edge_count, dpg_graph** out) {
  if (auto bad = require(out && (edges || edge_count == 0), "null argument")) return bad;
  return guarded([&] {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new dpg_graph{dpg::Graph(n, pairs)};
  });
}

dpg_status dpg_graph_parse(const char* text, const char* format, dpg_graph** out) {
  if (auto bad = require(text && format && out, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::parse_graph(text, format)}; });
}

dpg_status dpg_graph_format(const dpg_graph* g, const char* format, char** out) {
  if (auto bad = require(g && format && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(dpg::format_graph(g->graph, format)); });
}

int32_t dpg_graph_order(const dpg_graph* g) { return g ? g->graph.order() : 0; }

int32_t dpg_graph_size(const dpg_graph* g) { return g ? g->graph.size() : 0; }

int32_t dpg_graph_has_edge(const dpg_graph* g, int32_t u, int32_t v) {
  if (!g || u < 0 || v < 0 || u >= g->graph.order() || v >= g->graph.order()) return 0;
  return g->graph.has_edge(u, v);
}

int32_t dpg_graph_min_degree(const dpg_graph* g) { return g ? dpg::min_degree(g->graph) : 0; }

int32_t dpg_graph_is_connected(const dpg_graph* g) { return g ? dpg::is_connected(g->graph) : 0; }

dpg_status dpg_graph_degree(const dpg_graph* g, int32_t v, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] {
    g->graph.check_vertex(v);
    *out = g->graph.degree(v);
  });
}

dpg_status dpg_graph_neighborhood(const dpg_graph* g, int32_t v, int32_t closed,
                                  uint64_t* out_mask) {
  if (auto bad = require(g && out_mask, "null argument")) return bad;
  return guarded([&] { *out_mask = dpg::neighborhood(g->graph, v, closed != 0).bits; });
}

dpg_status dpg_graph_distance(const dpg_graph* g, int32_t u, int32_t v, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] {
    g->graph.check_vertex(u);
    g->graph.check_vertex(v);
    *out = dpg::apsp(g->graph)(u, v);
  });
}

dpg_status dpg_graph_cut_vertices(const dpg_graph* g, uint64_t* out_mask) {
  if (auto bad = require(g && out_mask, "null argument")) return bad;
  return guarded([&] { *out_mask = dpg::cut_vertices(g->graph).bits; });
}

dpg_status dpg_graph_power(const dpg_graph* g, int32_t ell, dpg_graph** out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::graph_power(g->graph, ell)}; });
}

dpg_status dpg_graph_induced(const dpg_graph* g, uint64_t vertex_mask, dpg_graph** out,
                             int32_t* old_to_new) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] {
    auto sub = dpg::induced_subgraph(g->graph, checked_set(g->graph, vertex_mask));
    if (old_to_new)
      for (int v = 0; v < g->graph.order(); ++v) old_to_new[v] = sub.old_to_new[v];
    *out = new dpg_graph{std::move(sub.graph)};
  });
}

dpg_status dpg_is_isometric(const dpg_graph* g, uint64_t vertex_mask, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_isometric(g->graph, checked_set(g->graph, vertex_mask)); });
}

dpg_status dpg_find_isometric_of_order(const dpg_graph* g, int32_t order, uint64_t* witness_mask,
                                       int32_t* found) {
  if (auto bad = require(g && found, "null argument")) return bad;
  return guarded([&] {
    const auto witness = dpg::find_isometric_of_order(g->graph, order);
    *found = witness.has_value();
    if (witness && witness_mask) *witness_mask = witness->bits;
  });
}

dpg_status dpg_ddp(const dpg_graph* g, uint64_t* out_orders) {
  if (auto bad = require(g && out_orders, "null argument")) return bad;
  return guarded([&] { *out_orders = dpg::dp_profile(g->graph).ddp().bits; });
}

dpg_status dpg_is_dp(const dpg_graph* g, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_dp(g->graph); });
}

dpg_status dpg_ddp_constrained(const dpg_graph* g, uint64_t avoid_mask, uint64_t require_any_mask,
                               uint64_t* out_orders) {
  if (auto bad = require(g && out_orders, "null argument")) return bad;
  return guarded([&] {
    const dpg::DpConstraint constraint{checked_set(g->graph, avoid_mask),
                                       checked_set(g->graph, require_any_mask)};
    *out_orders = dpg::ddp_constrained(g->graph, constraint).sizes().bits;
  });
}

dpg_status dpg_is_weakly_k_simplicial(const dpg_graph* g, int32_t v, int32_t k, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_weakly_k_simplicial(g->graph, v, k); });
}

dpg_status dpg_is_k_simplicial(const dpg_graph* g, int32_t v, int32_t k, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_k_simplicial(g->graph, v, k); });
}

dpg_status dpg_find_weakly_k_simplicial_ordering(const dpg_graph* g, int32_t k, int32_t* order_out,
                                                 int32_t* found) {
  if (auto bad = require(g && found, "null argument")) return bad;
  return guarded([&] { write_ordering(dpg::find_weakly_k_simplicial_ordering(g->graph, k), order_out, found); });
}

dpg_status dpg_find_k_simplicial_ordering(const dpg_graph* g, int32_t k, int32_t* order_out,
                                          int32_t* found) {
  if (auto bad = require(g && found, "null argument")) return bad;
  return guarded([&] { write_ordering(dpg::find_k_simplicial_ordering(g->graph, k), order_out, found); });
}

dpg_status dpg_find_sdp_ordering(const dpg_graph* g, int32_t* order_out, int32_t* found) {
  if (auto bad = require(g && found, "null argument")) return bad;
  return guarded([&] { write_ordering(dpg::find_sdp_ordering(g->graph), order_out, found); });
}

dpg_status dpg_is_sdp(const dpg_graph* g, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_sdp(g->graph); });
}

dpg_status dpg_verify_sdp_ordering(const dpg_graph* g, const int32_t* order, size_t len,
                                   int32_t* out) {
  if (auto bad = require(g && order && out, "null argument")) return bad;
  return guarded([&] {
    std::vector<int> perm(order, order + len);
    *out = dpg::verify_sdp_ordering(g->graph, perm);
  });
}

dpg_status dpg_longest_induced_cycle(const dpg_graph* g, int32_t* length, uint64_t* witness_mask) {
  if (auto bad = require(g && length, "null argument")) return bad;
  return guarded([&] {
    const auto report = dpg::chordality(g->graph);
    *length = report.longest_induced_cycle;
    if (witness_mask) *witness_mask = report.witness ? report.witness->bits : 0;
  });
}

dpg_status dpg_is_k_chordal(const dpg_graph* g, int32_t k, int32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = dpg::is_k_chordal(g->graph, k); });
}

dpg_status dpg_split_at_cut_vertex(const dpg_graph* g, int32_t x, uint64_t* left_mask,
                                   uint64_t* right_mask) {
  if (auto bad = require(g && left_mask && right_mask, "null argument")) return bad;
  return guarded([&] {
    const auto split = dpg::split_at_cut_vertex(g->graph, x);
    *left_mask = split.left.bits;
    *right_mask = split.right.bits;
  });
}

uint64_t dpg_compose_ddp(uint64_t need_g, uint64_t need_h, uint64_t avoid_g, uint64_t avoid_h) {
  return dpg::compose_ddp(dpg::SizeSet(need_g), dpg::SizeSet(need_h), dpg::SizeSet(avoid_g),
                          dpg::SizeSet(avoid_h))
      .bits;
}

dpg_status dpg_ddp_via_decomposition(const dpg_graph* g, uint64_t* out_orders) {
  if (auto bad = require(g && out_orders, "null argument")) return bad;
  return guarded([&] { *out_orders = dpg::ddp_via_decomposition(g->graph).bits; });
}

dpg_status dpg_path_join(const dpg_graph* g, int32_t x, const dpg_graph* h, int32_t y, int32_t r,
                         dpg_graph** out) {
  if (auto bad = require(g && h && out, "null argument")) return bad;
  return guarded([&] {
    *out = new dpg_graph{dpg::build_path_join({g->graph, x, h->graph, y, r})};
  });
}

dpg_status dpg_path_join_ddp(const dpg_graph* g, int32_t x, const dpg_graph* h, int32_t y,
                             int32_t r, uint64_t* out_orders) {
  if (auto bad = require(g && h && out_orders, "null argument")) return bad;
  return guarded([&] {
    *out_orders = dpg::path_join_ddp({g->graph, x, h->graph, y, r}).bits;
  });
}

dpg_status dpg_cycle(int32_t k, dpg_graph** out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::cycle(k)}; });
}

dpg_status dpg_path(int32_t n, dpg_graph** out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::path(n)}; });
}

dpg_status dpg_complete(int32_t n, dpg_graph** out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::complete(n)}; });
}

dpg_status dpg_nonchordal_sdp_example(dpg_graph** out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new dpg_graph{dpg::nonchordal_sdp_example()}; });
}

dpg_status dpg_ckl_build(int32_t k, const dpg_ckl_attachment* attachments, size_t count,
                         dpg_graph** out) {
  if (auto bad = require(out && (attachments || count == 0), "null argument")) return bad;
  return guarded([&] {
    dpg::CklSpec spec;
    spec.k = k;
    for (size_t i = 0; i < count; ++i)
      spec.attachments.push_back({attachments[i].window_start, attachments[i].joins});
    *out = new dpg_graph{dpg::build_ckl(spec).graph};
  });
}

dpg_status dpg_ckl_spec_count(int32_t k, int32_t ell, uint64_t* out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = dpg::ckl_spec_count(k, ell); });
}

dpg_status dpg_ckl_spec_at(int32_t k, int32_t ell, uint64_t index, dpg_ckl_attachment* out) {
  if (auto bad = require(out || ell == 0, "null argument")) return bad;
  return guarded([&] {
    const dpg::CklSpec spec = dpg::ckl_spec_at(k, ell, index);
    for (int i = 0; i < ell; ++i)
      out[i] = {spec.attachments[i].window_start, spec.attachments[i].joins};
  });
}

dpg_status dpg_ckl_sample(int32_t k, int32_t ell, uint64_t seed, dpg_ckl_attachment* out) {
  if (auto bad = require(out || ell == 0, "null argument")) return bad;
  return guarded([&] {
    const dpg::CklSpec spec = dpg::sample_ckl(k, ell, seed);
    for (int i = 0; i < ell; ++i)
      out[i] = {spec.attachments[i].window_start, spec.attachments[i].joins};
  });
}

dpg_status dpg_analyze_json(const dpg_graph* g, int32_t skip_exponential, int32_t force,
                            char** json_out) {
  if (auto bad = require(g && json_out, "null argument")) return bad;
  return guarded([&] {
    const auto report = dpg::analyze(g->graph, {skip_exponential != 0, force != 0});
    *json_out = copy_string(report.dump(2));
  });
}

dpg_status dpg_decompose_json(const dpg_graph* g, int32_t force, char** json_out) {
  if (auto bad = require(g && json_out, "null argument")) return bad;
  return guarded([&] {
    *json_out = copy_string(dpg::decompose_report(g->graph, force != 0).dump(2));
  });
}

dpg_status dpg_theorems_json(const char* suite, int32_t min_n, int32_t max_n, uint64_t seed,
                             int32_t threads, const char* catalog_path, char** json_out,
                             uint64_t* violations) {
  if (auto bad = require(suite && json_out, "null argument")) return bad;
  return guarded([&] {
    dpg::SweepOptions options{min_n, max_n, seed, threads, catalog_path ? catalog_path : ""};
    const auto outcome = dpg::run_theorem_suite(suite, options);
    *json_out = copy_string(outcome.report.dump(2));
    if (violations) *violations = outcome.violations;
  });
}

dpg_status dpg_conjectures_json(const char* name, int32_t min_n, int32_t max_n, uint64_t seed,
                                int32_t threads, const char* catalog_path, char** json_out,
                                uint64_t* violations, uint64_t* findings) {
  if (auto bad = require(name && json_out, "null argument")) return bad;
  return guarded([&] {
    dpg::SweepOptions options{min_n, max_n, seed, threads, catalog_path ? catalog_path : ""};
    const auto outcome = dpg::run_conjecture_suite(name, options);
    *json_out = copy_string(outcome.report.dump(2));
    if (violations) *violations = outcome.violations;
    if (findings) *findings = outcome.findings;
  });
}

}  // extern "C"
