// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

#include "core/isometry.hpp"

namespace dpg {

namespace {

void check_vertex_in_mask(const Graph& g, std::uint64_t mask, int v) {
  g.check_vertex(v);
  if (((mask >> v) & 1) == 0)
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in the induced set");
}

void check_k(int k) {
  if (k < 3) throw Error(ErrorCode::OutOfRange, "simplicial parameter k must be at least 3");
}

// True if some chordless path from x to y of length >= min_edges exists in
// G[mask] with every interior vertex inside interior_allowed. Exhaustive
// DFS over chordless extensions; long branches are never cut short, the
// search stops only when a violating completion has actually been found.
bool long_chordless_path_exists(const Graph& g, std::uint64_t mask, int x, int y,
                                std::uint64_t interior_allowed, int min_edges) {
  struct Frame {
    int vertex;
    std::uint64_t candidates;
  };
  const std::uint64_t ybit = std::uint64_t{1} << y;
  std::vector<Frame> stack;
  std::vector<std::uint64_t> path_mask;  // parallel to stack
  stack.push_back({x, g.adjacency(x) & mask & (interior_allowed | ybit)});
  path_mask.push_back(std::uint64_t{1} << x);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.candidates == 0) {
      stack.pop_back();
      path_mask.pop_back();
      continue;
    }
    const int w = std::countr_zero(top.candidates);
    top.candidates &= top.candidates - 1;
    // Chordless: w may touch the path only at the vertex it extends.
    const std::uint64_t earlier = path_mask.back() & ~(std::uint64_t{1} << top.vertex);
    if (g.adjacency(w) & mask & earlier) continue;
    if (w == y) {
      if (static_cast<int>(stack.size()) >= min_edges) return true;
      continue;  // shorter completion; other branches may still be longer
    }
    const std::uint64_t next_path = path_mask.back() | (std::uint64_t{1} << w);
    stack.push_back({w, g.adjacency(w) & mask & (interior_allowed | ybit) & ~next_path});
    path_mask.push_back(next_path);
  }
  return false;
}

// Backtracking elimination search shared by the weakly-k and k variants.
// Candidates are tried lowest index first; masks proven dead are memoised
// so no residual graph is re-explored.
template <typename StepOk>
std::optional<std::vector<int>> elimination_search(const Graph& g, StepOk&& step_ok) {
  const int n = g.order();
  std::vector<int> order(n, -1);
  std::unordered_set<std::uint64_t> dead;
  auto rec = [&](auto&& self, std::uint64_t mask, int depth) -> bool {
    if (std::popcount(mask) == 1) {
      order[depth] = std::countr_zero(mask);
      return true;
    }
    if (dead.contains(mask)) return false;
    for (int v : bits_of(mask)) {
      if (!step_ok(mask, v)) continue;
      if (self(self, mask & ~(std::uint64_t{1} << v), depth + 1)) {
        order[depth] = v;
        return true;
      }
    }
    dead.insert(mask);
    return false;
  };
  if (!rec(rec, g.full_mask(), 0)) return std::nullopt;
  return order;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, std::string(what) + " requires a connected graph");
}

}  // namespace

bool is_weakly_k_simplicial_in(const Graph& g, std::uint64_t mask, int v, int k) {
  check_vertex_in_mask(g, mask, v);
  check_k(k);
  const std::uint64_t nbrs = g.adjacency(v) & mask;
  if (std::popcount(nbrs) <= 1) return true;  // vacuous for degree 0 and 1
  const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
  std::int8_t dist[Graph::kMaxVertices];
  std::uint64_t sources = nbrs;
  while (sources) {
    int x = std::countr_zero(sources);
    sources &= sources - 1;
    if (sources == 0) break;  // pairs with the top neighbour already covered
    bfs_within(g, rest, x, dist);
    for (int y : bits_of(sources)) {
      int d = dist[y];
      if (d < 0 || d > k - 2) return false;
    }
  }
  return true;
}

bool is_k_simplicial_in(const Graph& g, std::uint64_t mask, int v, int k) {
  if (!is_weakly_k_simplicial_in(g, mask, v, k)) return false;
  const std::uint64_t nbrs = g.adjacency(v) & mask;
  const std::uint64_t closed = nbrs | (std::uint64_t{1} << v);
  const std::uint64_t interior_allowed = mask & ~closed;
  for (int x : bits_of(nbrs))
    for (int y : bits_of(nbrs & ~((std::uint64_t{2} << x) - 1))) {
      if (g.has_edge(x, y)) continue;
      if (long_chordless_path_exists(g, mask, x, y, interior_allowed, k - 1)) return false;
    }
  return true;
}

bool is_weakly_k_simplicial(const Graph& g, int v, int k) {
  return is_weakly_k_simplicial_in(g, g.full_mask(), v, k);
}

bool is_k_simplicial(const Graph& g, int v, int k) {
  return is_k_simplicial_in(g, g.full_mask(), v, k);
}

std::optional<EliminationOrdering> find_weakly_k_simplicial_ordering(const Graph& g, int k) {
  check_k(k);
  require_connected(g, "ordering search");
  auto order = elimination_search(
      g, [&](std::uint64_t mask, int v) { return is_weakly_k_simplicial_in(g, mask, v, k); });
  if (!order) return std::nullopt;
  return EliminationOrdering{std::move(*order), OrderingKind::WeaklyKSimplicial, k};
}

std::optional<EliminationOrdering> find_k_simplicial_ordering(const Graph& g, int k) {
  check_k(k);
  require_connected(g, "ordering search");
  auto order = elimination_search(
      g, [&](std::uint64_t mask, int v) { return is_k_simplicial_in(g, mask, v, k); });
  if (!order) return std::nullopt;
  return EliminationOrdering{std::move(*order), OrderingKind::KSimplicial, k};
}

std::optional<EliminationOrdering> find_sdp_ordering(const Graph& g) {
  auto found = find_weakly_k_simplicial_ordering(g, 4);
  if (!found) return std::nullopt;
  // Dual certification: the weakly-4-simplicial chain must also pass the
  // direct suffix-isometry definition. A failure here is a library bug.
  if (!verify_sdp_ordering(g, found->order))
    throw std::logic_error("weakly-4-simplicial ordering failed suffix isometry re-verification");
  found->kind = OrderingKind::Sdp;
  return found;
}

bool is_sdp(const Graph& g) { return find_sdp_ordering(g).has_value(); }

bool verify_sdp_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::uint64_t seen = 0;
  for (int v : order) {
    if (v < 0 || v >= n || ((seen >> v) & 1)) return false;
    seen |= std::uint64_t{1} << v;
  }
  const DistanceMatrix host = apsp(g);
  std::uint64_t mask = g.full_mask();
  for (int i = 0; i + 1 < n; ++i) {
    mask &= ~(std::uint64_t{1} << order[i]);
    if (!is_isometric(g, host, VertexSet(mask))) return false;
  }
  return true;
}

ChordalityReport chordality(const Graph& g) {
  const int n = g.order();
  ChordalityReport report;
  const std::uint64_t limit = VertexSet::first_n(n).bits;
  // Exhaustive scan: a vertex set induces a cycle exactly when every member
  // has induced degree 2 and the induced graph is connected.
  for (std::uint64_t mask = 7; mask != 0 && mask <= limit; ++mask) {
    const int sz = std::popcount(mask);
    if (sz < 3 || sz <= report.longest_induced_cycle) continue;
    bool all_degree_two = true;
    for (int v : bits_of(mask)) {
      if (std::popcount(g.adjacency(v) & mask) != 2) {
        all_degree_two = false;
        break;
      }
    }
    if (!all_degree_two || !connected_within(g, mask)) continue;
    report.longest_induced_cycle = sz;
    report.witness = VertexSet(mask);
    report.acyclic = false;
  }
  return report;
}

bool is_k_chordal(const Graph& g, int k) {
  check_k(k);
  return chordality(g).longest_induced_cycle <= k;
}

}  // namespace dpg
