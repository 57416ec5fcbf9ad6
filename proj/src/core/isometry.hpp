// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace dpg {

// Set of subgraph orders, bit i-1 set when order i is present (orders run
// 1..64, matching the vertex cap).
struct SizeSet {
  std::uint64_t bits = 0;

  constexpr SizeSet() = default;
  constexpr explicit SizeSet(std::uint64_t b) : bits(b) {}

  static constexpr SizeSet full_range(int n) { return SizeSet(VertexSet::first_n(n).bits); }

  constexpr bool contains(int size) const { return size >= 1 && size <= 64 && ((bits >> (size - 1)) & 1); }
  constexpr void add(int size) { bits |= std::uint64_t{1} << (size - 1); }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }

  friend constexpr SizeSet operator|(SizeSet a, SizeSet b) { return SizeSet(a.bits | b.bits); }
  friend constexpr bool operator==(SizeSet a, SizeSet b) { return a.bits == b.bits; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i : bits_of(bits)) out.push_back(i + 1);
    return out;
  }
};

// Presence and lexicographically-first witness of an isometric subgraph at
// every order 1..n of the host graph.
struct DpProfile {
  int order = 0;
  std::vector<std::optional<VertexSet>> witness;  // index i-1 holds the order-i witness

  SizeSet ddp() const {
    SizeSet s;
    for (int i = 1; i <= order; ++i)
      if (witness[i - 1]) s.add(i);
    return s;
  }
  bool is_dp() const { return ddp() == SizeSet::full_range(order); }
};

// X = vertices every set must avoid, Y = vertices every set must intersect
// (empty Y imposes nothing).
struct DpConstraint {
  VertexSet avoid;
  VertexSet require_any;
};

struct ConstrainedDdp {
  int order = 0;
  std::vector<std::optional<VertexSet>> witness;

  SizeSet sizes() const {
    SizeSet s;
    for (int i = 1; i <= order; ++i)
      if (witness[i - 1]) s.add(i);
    return s;
  }
};

bool is_isometric(const Graph& g, const DistanceMatrix& host, VertexSet a);
bool is_isometric(const Graph& g, VertexSet a);

std::optional<VertexSet> find_isometric_of_order(const Graph& g, const DistanceMatrix& host, int order);
std::optional<VertexSet> find_isometric_of_order(const Graph& g, int order);

DpProfile dp_profile(const Graph& g);
bool is_dp(const Graph& g);

ConstrainedDdp ddp_constrained(const Graph& g, DpConstraint c);

// Enumerates the size-k subsets of `universe` in ascending bitmask order.
// Stops early when fn returns true; returns whether fn ever did.
template <typename Fn>
bool for_each_subset_of_size(std::uint64_t universe, int k, Fn&& fn) {
  const int m = std::popcount(universe);
  if (k < 0 || k > m) return false;
  if (k == 0) return fn(std::uint64_t{0});
  // Compact the universe to indices 0..m-1, run Gosper's hack there, and
  // scatter each combination back through the index table.
  int table[64];
  int idx = 0;
  for (int v : bits_of(universe)) table[idx++] = v;
  std::uint64_t comb = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
  while (true) {
    std::uint64_t subset = 0;
    for (int i : bits_of(comb)) subset |= std::uint64_t{1} << table[i];
    if (fn(subset)) return true;
    if (m == 64 && comb == (~std::uint64_t{0} << (64 - k))) break;  // top combination, no successor
    std::uint64_t lo = comb & (~comb + 1);
    std::uint64_t carry = comb + lo;
    comb = (((comb ^ carry) >> 2) / lo) | carry;
    if (m < 64 && comb >= limit) break;
  }
  return false;
}

}  // namespace dpg
