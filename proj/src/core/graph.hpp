// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpg {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  SelfLoop,
  TooLarge,
  EmptySet,
  Disconnected,
  NotCutVertex,
  OverlappingConstraint,
  InvalidSpec,
  Parse,
  UnknownSuite,
};

// All recoverable failures carry one of the codes above; parse failures
// additionally carry the byte offset of the offending input.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t kNoOffset = ~std::size_t{0};

  Error(ErrorCode code, std::string message, std::size_t offset = kNoOffset)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  ErrorCode code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  ErrorCode code_;
  std::size_t offset_;
};

// Iterates the indices of set bits, lowest first.
class BitRange {
 public:
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };

  explicit BitRange(std::uint64_t bits) : bits_(bits) {}
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

inline BitRange bits_of(std::uint64_t mask) { return BitRange(mask); }

// Subset of the vertices 0..n-1 of some graph, one bit per vertex.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  int lowest() const { return std::countr_zero(bits); }

  constexpr VertexSet with(int v) const { return VertexSet(bits | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

  BitRange::iterator begin() const { return BitRange(bits).begin(); }
  BitRange::iterator end() const { return BitRange(bits).end(); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : bits_of(bits)) out.push_back(v);
    return out;
  }
};

// All-pairs hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() : n_(0) {}
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int dist) { d_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(dist); }

  // Largest finite entry; kUnreachable if the graph is disconnected.
  int diameter() const {
    int best = 0;
    for (std::int8_t e : d_) {
      if (e < 0) return kUnreachable;
      if (e > best) best = e;
    }
    return best;
  }

 private:
  int n_;
  std::vector<std::int8_t> d_;
};

// Immutable simple undirected graph on vertices 0..n-1, one adjacency
// bitmask per vertex. Hard-capped at 64 vertices so every vertex set and
// every adjacency row is a single machine word.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n), adj_(n, 0) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "graph order must be at least 1");
    if (n > kMaxVertices)
      throw Error(ErrorCode::TooLarge,
                  "graph order " + std::to_string(n) + " exceeds the supported maximum of 64");
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorCode::OutOfRange, "edge endpoint out of range: (" + std::to_string(u) +
                                               "," + std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
    edge_count_ = 0;
    for (int v = 0; v < n_; ++v) edge_count_ += std::popcount(adj_[v]);
    edge_count_ /= 2;
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return edge_count_; }
  std::uint64_t adjacency(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  std::uint64_t full_mask() const { return VertexSet::first_n(n_).bits; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::OutOfRange,
                  "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
      for (int v : bits_of(adj_[u] >> u >> 1)) out.emplace_back(u, u + 1 + v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
  int edge_count_;
};

// BFS kernels restricted to an arbitrary vertex mask. These back every
// distance, connectivity and isometry computation in the library.

inline std::uint64_t reach_within(const Graph& g, std::uint64_t mask, int src) {
  std::uint64_t visited = std::uint64_t{1} << src;
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : bits_of(frontier)) next |= g.adjacency(v);
    next &= mask & ~visited;
    visited |= next;
    frontier = next;
  }
  return visited;
}

inline bool connected_within(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return true;
  return reach_within(g, mask, std::countr_zero(mask)) == mask;
}

// Fills dist (one slot per vertex of g) with hop counts from src inside
// G[mask]; vertices outside the mask or unreachable stay at -1.
inline void bfs_within(const Graph& g, std::uint64_t mask, int src, std::int8_t* dist) {
  for (int v : bits_of(mask)) dist[v] = -1;
  dist[src] = 0;
  std::uint64_t visited = std::uint64_t{1} << src;
  std::uint64_t frontier = visited;
  std::int8_t level = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : bits_of(frontier)) next |= g.adjacency(v);
    next &= mask & ~visited;
    ++level;
    for (int v : bits_of(next)) dist[v] = level;
    visited |= next;
    frontier = next;
  }
}

DistanceMatrix apsp(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices not in the set
  std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a);
Graph graph_power(const Graph& g, int ell);
bool is_connected(const Graph& g);
VertexSet cut_vertices(const Graph& g);
VertexSet neighborhood(const Graph& g, int v, bool closed);
int min_degree(const Graph& g);

}  // namespace dpg
