/* SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for the dpgraph library: decide and certify distance-preserving
 * (dp) and sequentially distance-preserving (sdp) structure in small
 * connected graphs.
 *
 * Conventions:
 *   - Graphs are opaque handles capped at 64 vertices (indices 0..n-1).
 *   - Vertex sets travel as 64-bit masks, bit v = vertex v.
 *   - Sets of subgraph orders travel as 64-bit masks, bit i-1 = order i.
 *   - Every fallible call returns dpg_status; on failure dpg_last_error()
 *     holds a thread-local description of what went wrong.
 *   - Strings returned through char** are heap-allocated; release them with
 *     dpg_string_free.
 */

#ifndef DPGRAPH_H
#define DPGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DPG_API __declspec(dllexport)
#else
#define DPG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dpg_graph dpg_graph;

typedef enum dpg_status {
  DPG_OK = 0,
  DPG_ERROR_INVALID_ARGUMENT = 1,
  DPG_ERROR_OUT_OF_RANGE = 2,
  DPG_ERROR_SELF_LOOP = 3,
  DPG_ERROR_TOO_LARGE = 4,
  DPG_ERROR_EMPTY_SET = 5,
  DPG_ERROR_DISCONNECTED = 6,
  DPG_ERROR_NOT_CUT_VERTEX = 7,
  DPG_ERROR_OVERLAPPING_CONSTRAINT = 8,
  DPG_ERROR_INVALID_SPEC = 9,
  DPG_ERROR_PARSE = 10,
  DPG_ERROR_UNKNOWN_SUITE = 11,
  DPG_ERROR_INTERNAL = 12
} dpg_status;

/* Distance value for vertex pairs in different components. */
#define DPG_UNREACHABLE (-1)

DPG_API const char* dpg_status_name(dpg_status status);
DPG_API const char* dpg_last_error(void);
/* Byte offset of the last parse failure, (size_t)-1 when not applicable. */
DPG_API size_t dpg_last_error_offset(void);

DPG_API void dpg_graph_free(dpg_graph* g);
DPG_API void dpg_string_free(char* s);

/* ---- construction and codecs ------------------------------------------ */

/* edges: flattened endpoint pairs u0,v0,u1,v1,...; duplicates collapse. */
DPG_API dpg_status dpg_graph_build(int32_t n, const int32_t* edges, size_t edge_count,
                                   dpg_graph** out);
/* format: "edgelist" or "graph6". */
DPG_API dpg_status dpg_graph_parse(const char* text, const char* format, dpg_graph** out);
DPG_API dpg_status dpg_graph_format(const dpg_graph* g, const char* format, char** out);

/* ---- basic queries ----------------------------------------------------- */

DPG_API int32_t dpg_graph_order(const dpg_graph* g);
DPG_API int32_t dpg_graph_size(const dpg_graph* g);
DPG_API int32_t dpg_graph_has_edge(const dpg_graph* g, int32_t u, int32_t v);
DPG_API int32_t dpg_graph_min_degree(const dpg_graph* g);
DPG_API int32_t dpg_graph_is_connected(const dpg_graph* g);
DPG_API dpg_status dpg_graph_degree(const dpg_graph* g, int32_t v, int32_t* out);
DPG_API dpg_status dpg_graph_neighborhood(const dpg_graph* g, int32_t v, int32_t closed,
                                          uint64_t* out_mask);
DPG_API dpg_status dpg_graph_distance(const dpg_graph* g, int32_t u, int32_t v, int32_t* out);
DPG_API dpg_status dpg_graph_cut_vertices(const dpg_graph* g, uint64_t* out_mask);
DPG_API dpg_status dpg_graph_power(const dpg_graph* g, int32_t ell, dpg_graph** out);
/* old_to_new: optional array of length order(g); -1 marks dropped vertices. */
DPG_API dpg_status dpg_graph_induced(const dpg_graph* g, uint64_t vertex_mask, dpg_graph** out,
                                     int32_t* old_to_new);

/* ---- isometric subgraphs ---------------------------------------------- */

DPG_API dpg_status dpg_is_isometric(const dpg_graph* g, uint64_t vertex_mask, int32_t* out);
DPG_API dpg_status dpg_find_isometric_of_order(const dpg_graph* g, int32_t order,
                                               uint64_t* witness_mask, int32_t* found);
DPG_API dpg_status dpg_ddp(const dpg_graph* g, uint64_t* out_orders);
DPG_API dpg_status dpg_is_dp(const dpg_graph* g, int32_t* out);
/* avoid_mask/require_any_mask: the X / Y constraints; 0 means unconstrained. */
DPG_API dpg_status dpg_ddp_constrained(const dpg_graph* g, uint64_t avoid_mask,
                                       uint64_t require_any_mask, uint64_t* out_orders);

/* ---- simplicial structure and orderings -------------------------------- */

DPG_API dpg_status dpg_is_weakly_k_simplicial(const dpg_graph* g, int32_t v, int32_t k,
                                              int32_t* out);
DPG_API dpg_status dpg_is_k_simplicial(const dpg_graph* g, int32_t v, int32_t k, int32_t* out);
/* order_out: caller-allocated array of length order(g); filled when *found. */
DPG_API dpg_status dpg_find_weakly_k_simplicial_ordering(const dpg_graph* g, int32_t k,
                                                         int32_t* order_out, int32_t* found);
DPG_API dpg_status dpg_find_k_simplicial_ordering(const dpg_graph* g, int32_t k,
                                                  int32_t* order_out, int32_t* found);
DPG_API dpg_status dpg_find_sdp_ordering(const dpg_graph* g, int32_t* order_out, int32_t* found);
DPG_API dpg_status dpg_is_sdp(const dpg_graph* g, int32_t* out);
DPG_API dpg_status dpg_verify_sdp_ordering(const dpg_graph* g, const int32_t* order, size_t len,
                                           int32_t* out);
/* length 0 with witness 0 means acyclic. */
DPG_API dpg_status dpg_longest_induced_cycle(const dpg_graph* g, int32_t* length,
                                             uint64_t* witness_mask);
DPG_API dpg_status dpg_is_k_chordal(const dpg_graph* g, int32_t k, int32_t* out);

/* ---- cut-vertex decomposition ------------------------------------------ */

DPG_API dpg_status dpg_split_at_cut_vertex(const dpg_graph* g, int32_t x, uint64_t* left_mask,
                                           uint64_t* right_mask);
/* Pure order-set algebra: (need_g + need_h - 1) ∪ avoid_g ∪ avoid_h. */
DPG_API uint64_t dpg_compose_ddp(uint64_t need_g, uint64_t need_h, uint64_t avoid_g,
                                 uint64_t avoid_h);
DPG_API dpg_status dpg_ddp_via_decomposition(const dpg_graph* g, uint64_t* out_orders);
DPG_API dpg_status dpg_path_join(const dpg_graph* g, int32_t x, const dpg_graph* h, int32_t y,
                                 int32_t r, dpg_graph** out);
DPG_API dpg_status dpg_path_join_ddp(const dpg_graph* g, int32_t x, const dpg_graph* h, int32_t y,
                                     int32_t r, uint64_t* out_orders);

/* ---- graph families ----------------------------------------------------- */

DPG_API dpg_status dpg_cycle(int32_t k, dpg_graph** out);
DPG_API dpg_status dpg_path(int32_t n, dpg_graph** out);
DPG_API dpg_status dpg_complete(int32_t n, dpg_graph** out);
/* Seven-vertex demo graph: sdp although it contains an induced 5-cycle. */
DPG_API dpg_status dpg_nonchordal_sdp_example(dpg_graph** out);

/* One extra vertex on a window of three consecutive cycle positions; joins
 * bit j (0..2) connects it to cycle vertex (window_start + j) mod k. */
typedef struct dpg_ckl_attachment {
  int32_t window_start;
  uint32_t joins;
} dpg_ckl_attachment;

DPG_API dpg_status dpg_ckl_build(int32_t k, const dpg_ckl_attachment* attachments, size_t count,
                                 dpg_graph** out);
DPG_API dpg_status dpg_ckl_spec_count(int32_t k, int32_t ell, uint64_t* out);
/* out: caller-allocated array of ell entries. */
DPG_API dpg_status dpg_ckl_spec_at(int32_t k, int32_t ell, uint64_t index,
                                   dpg_ckl_attachment* out);
DPG_API dpg_status dpg_ckl_sample(int32_t k, int32_t ell, uint64_t seed, dpg_ckl_attachment* out);

/* ---- JSON reports and sweep suites -------------------------------------- */

DPG_API dpg_status dpg_analyze_json(const dpg_graph* g, int32_t skip_exponential, int32_t force,
                                    char** json_out);
DPG_API dpg_status dpg_decompose_json(const dpg_graph* g, int32_t force, char** json_out);
/* threads <= 0 defers to the DP_THREADS environment variable, then to the
 * hardware concurrency. catalog_path may be NULL. */
DPG_API dpg_status dpg_theorems_json(const char* suite, int32_t min_n, int32_t max_n,
                                     uint64_t seed, int32_t threads, const char* catalog_path,
                                     char** json_out, uint64_t* violations);
DPG_API dpg_status dpg_conjectures_json(const char* name, int32_t min_n, int32_t max_n,
                                        uint64_t seed, int32_t threads, const char* catalog_path,
                                        char** json_out, uint64_t* violations,
                                        uint64_t* findings);

#ifdef __cplusplus
}
#endif

#endif /* DPGRAPH_H */
