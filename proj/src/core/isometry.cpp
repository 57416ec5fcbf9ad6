// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/isometry.hpp"

namespace dpg {

namespace {

// Distances inside G[a] from every vertex of a, compared against host
// distances. A mismatch can only be ">" (paths in the induced subgraph are
// paths in the host), and disconnection inside G[a] shows up as -1 on the
// subgraph side, which never equals a finite host distance. The BFS from
// the first vertex therefore doubles as the connectivity pre-filter.
bool isometric_impl(const Graph& g, const DistanceMatrix& host, VertexSet a) {
  std::int8_t sub[Graph::kMaxVertices];
  std::uint64_t rest = a.bits;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    if (rest == 0) break;  // every pair involving the top vertex is already checked
    bfs_within(g, a.bits, u, sub);
    for (int v : bits_of(rest))
      if (sub[v] != host(u, v)) return false;
  }
  return true;
}

}  // namespace

bool is_isometric(const Graph& g, const DistanceMatrix& host, VertexSet a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "isometry test on the empty set");
  if (!a.subset_of(g.vertices()))
    throw Error(ErrorCode::OutOfRange, "vertex set contains vertices outside the graph");
  return isometric_impl(g, host, a);
}

bool is_isometric(const Graph& g, VertexSet a) { return is_isometric(g, apsp(g), a); }

std::optional<VertexSet> find_isometric_of_order(const Graph& g, const DistanceMatrix& host, int order) {
  if (order < 1 || order > g.order())
    throw Error(ErrorCode::OutOfRange, "subgraph order must lie in 1..n");
  if (order == g.order()) return g.vertices();
  std::optional<VertexSet> found;
  for_each_subset_of_size(g.full_mask(), order, [&](std::uint64_t subset) {
    if (isometric_impl(g, host, VertexSet(subset))) {
      found = VertexSet(subset);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<VertexSet> find_isometric_of_order(const Graph& g, int order) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "isometric search requires a connected graph");
  return find_isometric_of_order(g, apsp(g), order);
}

DpProfile dp_profile(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "dp profile requires a connected graph");
  const DistanceMatrix host = apsp(g);
  DpProfile profile;
  profile.order = g.order();
  profile.witness.resize(g.order());
  for (int i = g.order(); i >= 1; --i) profile.witness[i - 1] = find_isometric_of_order(g, host, i);
  return profile;
}

bool is_dp(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "dp test requires a connected graph");
  const DistanceMatrix host = apsp(g);
  for (int i = g.order() - 1; i >= 2; --i)
    if (!find_isometric_of_order(g, host, i)) return false;
  return true;
}

ConstrainedDdp ddp_constrained(const Graph& g, DpConstraint c) {
  if (!is_connected(g))
    throw Error(ErrorCode::Disconnected, "constrained ddp requires a connected graph");
  if (c.avoid.intersects(c.require_any))
    throw Error(ErrorCode::OverlappingConstraint, "avoid and require sets overlap");
  if (!c.avoid.subset_of(g.vertices()) || !c.require_any.subset_of(g.vertices()))
    throw Error(ErrorCode::OutOfRange, "constraint contains vertices outside the graph");
  const DistanceMatrix host = apsp(g);
  const std::uint64_t universe = g.full_mask() & ~c.avoid.bits;
  ConstrainedDdp out;
  out.order = g.order();
  out.witness.resize(g.order());
  const int max_size = std::popcount(universe);
  for (int i = 1; i <= max_size; ++i) {
    for_each_subset_of_size(universe, i, [&](std::uint64_t subset) {
      if (!c.require_any.empty() && (subset & c.require_any.bits) == 0) return false;
      if (isometric_impl(g, host, VertexSet(subset))) {
        out.witness[i - 1] = VertexSet(subset);
        return true;
      }
      return false;
    });
  }
  return out;
}

}  // namespace dpg
