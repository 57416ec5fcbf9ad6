// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/graph.hpp"

namespace dpg {

DistanceMatrix apsp(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(n);
  std::vector<std::int8_t> row(n);
  const std::uint64_t full = g.full_mask();
  for (int u = 0; u < n; ++u) {
    bfs_within(g, full, u, row.data());
    for (int v = 0; v < n; ++v) d.set(u, v, row[v]);
  }
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "induced subgraph of the empty set");
  if (!a.subset_of(g.vertices()))
    throw Error(ErrorCode::OutOfRange, "vertex set contains vertices outside the graph");
  std::vector<int> old_to_new(g.order(), -1);
  std::vector<int> new_to_old;
  new_to_old.reserve(a.count());
  for (int v : a) {
    old_to_new[v] = static_cast<int>(new_to_old.size());
    new_to_old.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : a)
    for (int v : bits_of(g.adjacency(u) & a.bits))
      if (u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return InducedSubgraph{Graph(a.count(), edges), std::move(old_to_new), std::move(new_to_old)};
}

Graph graph_power(const Graph& g, int ell) {
  if (ell < 1) throw Error(ErrorCode::OutOfRange, "graph power exponent must be at least 1");
  const DistanceMatrix d = apsp(g);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      int dist = d(u, v);
      if (dist != DistanceMatrix::kUnreachable && dist <= ell) edges.emplace_back(u, v);
    }
  return Graph(g.order(), edges);
}

bool is_connected(const Graph& g) { return connected_within(g, g.full_mask()); }

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "cut vertices require a connected graph");
  VertexSet cuts;
  const std::uint64_t full = g.full_mask();
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t rest = full & ~(std::uint64_t{1} << v);
    if (!connected_within(g, rest)) cuts = cuts.with(v);
  }
  return cuts;
}

VertexSet neighborhood(const Graph& g, int v, bool closed) {
  g.check_vertex(v);
  VertexSet out(g.adjacency(v));
  return closed ? out.with(v) : out;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace dpg
