// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/families.hpp"

#include <random>

#include "core/isometry.hpp"
#include "core/simplicial.hpp"

namespace dpg {

Graph cycle(int k) {
  if (k < 3) throw Error(ErrorCode::OutOfRange, "cycle length must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(k - 1, 0);
  return Graph(k, edges);
}

Graph path(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "path order must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "complete graph order must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

CklGraph build_ckl(const CklSpec& spec) {
  const int k = spec.k;
  if (k < 3) throw Error(ErrorCode::InvalidSpec, "cycle length must be at least 3");
  const int ell = static_cast<int>(spec.attachments.size());
  if (k + ell > Graph::kMaxVertices)
    throw Error(ErrorCode::TooLarge, "construction would exceed 64 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(k - 1, 0);
  for (int a = 0; a < ell; ++a) {
    const CklAttachment& att = spec.attachments[a];
    if (att.joins == 0 || att.joins > 7)
      throw Error(ErrorCode::InvalidSpec,
                  "attachment joins must be a non-empty subset of its 3-vertex window");
    if (att.window_start < 0) throw Error(ErrorCode::InvalidSpec, "window start must be non-negative");
    for (int j = 0; j < 3; ++j)
      if (att.joins & (1u << j)) edges.emplace_back(k + a, (att.window_start + j) % k);
  }
  CklGraph out{Graph(k + ell, edges), VertexSet::first_n(k),
               VertexSet(VertexSet::first_n(k + ell).bits & ~VertexSet::first_n(k).bits)};
  // Attachments within a 3-vertex window cannot create shortcuts between
  // cycle vertices, so the cycle must remain isometric; anything else means
  // the spec above was not honoured.
  if (!is_isometric(out.graph, out.cycle_vertices))
    throw Error(ErrorCode::InvalidSpec, "construction broke cycle isometry");
  return out;
}

std::uint64_t ckl_spec_count(int k, int ell) {
  if (k < 3 || ell < 0) throw Error(ErrorCode::OutOfRange, "invalid family parameters");
  std::uint64_t count = 1;
  const std::uint64_t per_attachment = static_cast<std::uint64_t>(k) * 7;
  for (int i = 0; i < ell; ++i) {
    if (count > ~std::uint64_t{0} / per_attachment)
      throw Error(ErrorCode::TooLarge, "family too large to index");
    count *= per_attachment;
  }
  return count;
}

CklSpec ckl_spec_at(int k, int ell, std::uint64_t index) {
  const std::uint64_t total = ckl_spec_count(k, ell);
  if (index >= total) throw Error(ErrorCode::OutOfRange, "family index out of range");
  CklSpec spec{k, std::vector<CklAttachment>(ell)};
  // Mixed-radix digits, least significant digit = last attachment.
  for (int a = ell - 1; a >= 0; --a) {
    const std::uint64_t digit = index % (static_cast<std::uint64_t>(k) * 7);
    index /= static_cast<std::uint64_t>(k) * 7;
    spec.attachments[a].window_start = static_cast<int>(digit / 7);
    spec.attachments[a].joins = static_cast<unsigned>(digit % 7) + 1;
  }
  return spec;
}

CklSpec sample_ckl(int k, int ell, std::uint64_t seed) {
  ckl_spec_count(k, ell);
  std::mt19937_64 rng(seed);
  CklSpec spec{k, std::vector<CklAttachment>(ell)};
  for (auto& att : spec.attachments) {
    att.window_start = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    att.joins = static_cast<unsigned>(rng() % 7) + 1;
  }
  return spec;
}

Graph nonchordal_sdp_example() {
  return Graph(7, {{6, 5}, {6, 1}, {6, 4}, {5, 4}, {5, 2}, {4, 3}, {4, 0}, {3, 2}, {2, 1}, {0, 1}});
}

Graph graph_from_edge_mask(int n, std::uint64_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((edge_mask >> edge_bit_index(i, j)) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t edge_mask_of(const Graph& g) {
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_bit_index(u, v);
  return mask;
}

void for_each_connected_graph(int n, const CatalogFilter& filter,
                              const std::function<void(const Graph&, std::uint64_t)>& fn) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "catalog order must be at least 1");
  if (n > kMaxExhaustiveOrder)
    throw Error(ErrorCode::TooLarge,
                "exhaustive catalogs are capped at n <= " + std::to_string(kMaxExhaustiveOrder));
  const std::uint64_t total = std::uint64_t{1} << edge_bit_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (!is_connected(g)) continue;
    if (filter.min_degree > 0 && min_degree(g) < filter.min_degree) continue;
    if (filter.max_induced_cycle > 0 && !is_k_chordal(g, filter.max_induced_cycle)) continue;
    fn(g, mask);
  }
}

}  // namespace dpg
