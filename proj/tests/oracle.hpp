// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0
//
// Deliberately naive reference implementations used to pin expected values.
// Everything here works on adjacency lists with Floyd-Warshall distances and
// recursive subset enumeration, independent of the bitset/BFS code paths it
// is used to check.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "core/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> to_adjlist(const dpg::Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) d[v][w] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::vector<int>> induced_adjlist(const std::vector<std::vector<int>>& adj,
                                                     const std::vector<int>& subset) {
  std::vector<int> pos(adj.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (int w : adj[subset[i]])
      if (pos[w] >= 0) out[i].push_back(pos[w]);
  return out;
}

inline bool is_isometric(const dpg::Graph& g, const std::vector<int>& subset) {
  const auto adj = to_adjlist(g);
  const auto host = floyd_warshall(adj);
  const auto sub = floyd_warshall(induced_adjlist(adj, subset));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const int a = host[subset[i]][subset[j]] >= kInf ? -1 : host[subset[i]][subset[j]];
      const int b = sub[i][j] >= kInf ? -1 : sub[i][j];
      if (a != b) return false;
    }
  return true;
}

inline void enumerate_subsets(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (next == n) {
      if (!subset.empty()) fn(subset);
      return;
    }
    self(self, next + 1);
    subset.push_back(next);
    self(self, next + 1);
    subset.pop_back();
  };
  rec(rec, 0);
}

inline std::set<int> ddp(const dpg::Graph& g) {
  std::set<int> sizes;
  enumerate_subsets(g.order(), [&](const std::vector<int>& subset) {
    if (is_isometric(g, subset)) sizes.insert(static_cast<int>(subset.size()));
  });
  return sizes;
}

inline std::set<int> ddp_constrained(const dpg::Graph& g, const std::set<int>& avoid,
                                     const std::set<int>& require_any) {
  std::set<int> sizes;
  enumerate_subsets(g.order(), [&](const std::vector<int>& subset) {
    for (int v : subset)
      if (avoid.count(v)) return;
    if (!require_any.empty()) {
      bool hit = false;
      for (int v : subset) hit = hit || require_any.count(v) > 0;
      if (!hit) return;
    }
    if (is_isometric(g, subset)) sizes.insert(static_cast<int>(subset.size()));
  });
  return sizes;
}

inline bool induces_cycle(const dpg::Graph& g, const std::vector<int>& subset) {
  if (subset.size() < 3) return false;
  const auto sub = induced_adjlist(to_adjlist(g), subset);
  for (const auto& nbrs : sub)
    if (nbrs.size() != 2) return false;
  // connected + all degrees 2 = a single cycle
  std::vector<bool> seen(sub.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : sub[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == sub.size();
}

inline int longest_induced_cycle(const dpg::Graph& g) {
  int best = 0;
  enumerate_subsets(g.order(), [&](const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) > best && induces_cycle(g, subset))
      best = static_cast<int>(subset.size());
  });
  return best;
}

// Recursive removal search straight off the definition: some vertex can be
// deleted so that the remainder stays isometric in g, down to one vertex.
inline bool is_sdp(const dpg::Graph& g) {
  const int n = g.order();
  std::set<std::uint64_t> dead;
  auto key_of = [](const std::vector<int>& remaining) {
    std::uint64_t k = 0;
    for (int v : remaining) k |= std::uint64_t{1} << v;
    return k;
  };
  auto rec = [&](auto&& self, std::vector<int> remaining) -> bool {
    if (remaining.size() == 1) return true;
    const std::uint64_t key = key_of(remaining);
    if (dead.count(key)) return false;
    for (std::size_t drop = 0; drop < remaining.size(); ++drop) {
      std::vector<int> next;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (i != drop) next.push_back(remaining[i]);
      if (!is_isometric(g, next)) continue;
      if (self(self, next)) return true;
    }
    dead.insert(key);
    return false;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return rec(rec, all);
}

}  // namespace oracle
