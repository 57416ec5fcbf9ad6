// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace dpg {

enum class OrderingKind { Sdp, WeaklyKSimplicial, KSimplicial };

// A certified elimination ordering: position i is removed first, and at that
// point satisfies the kind's step test in the still-remaining graph.
struct EliminationOrdering {
  std::vector<int> order;
  OrderingKind kind = OrderingKind::WeaklyKSimplicial;
  int k = 4;
};

struct ChordalityReport {
  int longest_induced_cycle = 0;  // 0 when the graph is acyclic
  std::optional<VertexSet> witness;
  bool acyclic = true;
};

// Step tests inside an induced subgraph G[mask]. Unreachable neighbour pairs
// count as distance infinity and fail every bound.
bool is_weakly_k_simplicial_in(const Graph& g, std::uint64_t mask, int v, int k);
bool is_k_simplicial_in(const Graph& g, std::uint64_t mask, int v, int k);

bool is_weakly_k_simplicial(const Graph& g, int v, int k);
bool is_k_simplicial(const Graph& g, int v, int k);

std::optional<EliminationOrdering> find_weakly_k_simplicial_ordering(const Graph& g, int k);
std::optional<EliminationOrdering> find_k_simplicial_ordering(const Graph& g, int k);
std::optional<EliminationOrdering> find_sdp_ordering(const Graph& g);
bool is_sdp(const Graph& g);

// Checks that deleting the ordering's prefixes leaves an isometric subgraph
// of g at every step. Independent of the ordering searches above.
bool verify_sdp_ordering(const Graph& g, std::span<const int> order);

ChordalityReport chordality(const Graph& g);
bool is_k_chordal(const Graph& g, int k);

}  // namespace dpg
