// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/graph.hpp"

namespace dpg {

Graph cycle(int k);
Graph path(int n);
Graph complete(int n);

// One extra vertex hooked onto a window of three consecutive cycle
// positions: joins bit j (0..2) connects it to cycle vertex
// (window_start + j) mod k.
struct CklAttachment {
  int window_start = 0;
  unsigned joins = 0;
};

struct CklSpec {
  int k = 3;
  std::vector<CklAttachment> attachments;
};

struct CklGraph {
  Graph graph;
  VertexSet cycle_vertices;
  VertexSet added_vertices;
};

// Cycle vertices 0..k-1 followed by the added vertices in attachment order.
// Added vertices touch cycle vertices only. Construction re-checks that the
// cycle stays isometric in the result and fails loudly if not, since that
// can only mean the spec invariants were violated.
CklGraph build_ckl(const CklSpec& spec);

// Deterministic enumeration: attachment tuples ordered by window start
// (ascending, leftmost attachment slowest) and join mask (1..7 binary).
std::uint64_t ckl_spec_count(int k, int ell);
CklSpec ckl_spec_at(int k, int ell, std::uint64_t index);
CklSpec sample_ckl(int k, int ell, std::uint64_t seed);

// Seven-vertex example that admits a sequential elimination ordering even
// though it contains an induced 5-cycle; the identity ordering 0..6 is one
// such ordering.
Graph nonchordal_sdp_example();

struct CatalogFilter {
  int min_degree = 0;
  int max_induced_cycle = 0;  // 0 = no chordality filter
};

// Every connected labeled graph on n vertices, one per adjacency bitmask,
// ascending in the column-major edge encoding. Exhaustive enumeration is
// capped at n <= 7 (2^21 masks); larger catalogs must come from files.
constexpr int kMaxExhaustiveOrder = 7;
void for_each_connected_graph(int n, const CatalogFilter& filter,
                              const std::function<void(const Graph&, std::uint64_t edge_mask)>& fn);

// Pair indexing for single-word edge masks: pair (i,j) with i<j sits at bit
// j(j-1)/2 + i, the column-major upper-triangle order. Only meaningful while
// C(n,2) fits in 64 bits, i.e. for the exhaustive catalog range.
constexpr int edge_bit_index(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int edge_bit_count(int n) { return n * (n - 1) / 2; }
Graph graph_from_edge_mask(int n, std::uint64_t edge_mask);
std::uint64_t edge_mask_of(const Graph& g);

}  // namespace dpg
