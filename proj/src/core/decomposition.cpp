// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/decomposition.hpp"

#include <unordered_map>

namespace dpg {

namespace {

// Sumset of the two through-vertex sets with the shared vertex counted
// once: sizes a and b combine to a+b-1, i.e. bit (a-1)+(b-1). Shifting one
// side's bitset left by each set bit index of the other does exactly that.
// Sums past order 64 fall off the top; they cannot occur for graphs within
// the vertex cap.
SizeSet compose_need_sides(SizeSet need_g, SizeSet need_h) {
  std::uint64_t out = 0;
  for (int b : bits_of(need_h.bits)) out |= need_g.bits << b;
  return SizeSet(out);
}

// Lowest-index cut vertex of G[mask], or -1 when the piece is 2-connected
// (or too small to have one).
int find_cut_vertex_in(const Graph& g, std::uint64_t mask) {
  if (std::popcount(mask) < 3) return -1;
  for (int v : bits_of(mask)) {
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    if (!connected_within(g, rest)) return v;
  }
  return -1;
}

struct ConstraintKey {
  std::uint64_t mask, require, avoid;
  bool operator==(const ConstraintKey&) const = default;
};

struct ConstraintKeyHash {
  std::size_t operator()(const ConstraintKey& k) const {
    std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ull;
    h ^= k.require + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= k.avoid + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct DecompContext {
  const Graph& g;
  DistanceMatrix host;
  std::unordered_map<ConstraintKey, SizeSet, ConstraintKeyHash> memo;
};

// Direct enumeration: sizes of isometric A with require ⊆ A ⊆ mask∖avoid.
// Isometry is judged against the host metric, which equals the piece-local
// metric on every mask the recursion produces.
SizeSet enumerate_sizes(DecompContext& ctx, std::uint64_t mask, std::uint64_t require,
                        std::uint64_t avoid) {
  SizeSet out;
  const std::uint64_t free_universe = (mask & ~avoid) & ~require;
  const int base = std::popcount(require);
  const int max_extra = std::popcount(free_universe);
  for (int extra = (base == 0 ? 1 : 0); extra <= max_extra; ++extra) {
    for_each_subset_of_size(free_universe, extra, [&](std::uint64_t subset) {
      if (!is_isometric(ctx.g, ctx.host, VertexSet(subset | require))) return false;
      out.add(base + extra);
      return true;
    });
  }
  return out;
}

// Sizes of isometric sets A with require ⊆ A ⊆ mask∖avoid, splitting at cut
// vertices of G[mask] and composing the two sides. The carry-along
// require/avoid constraints keep nested splits expressible: a set through
// the cut vertex decomposes into one anchored part per side, a set missing
// it cannot straddle the split.
SizeSet ddp_sets_rec(DecompContext& ctx, std::uint64_t mask, std::uint64_t require,
                     std::uint64_t avoid) {
  const ConstraintKey key{mask, require, avoid};
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  SizeSet out;
  const int y = find_cut_vertex_in(ctx.g, mask);
  if (y < 0) {
    out = enumerate_sizes(ctx, mask, require, avoid);
  } else {
    const std::uint64_t ybit = std::uint64_t{1} << y;
    const std::uint64_t rest = mask & ~ybit;
    const std::uint64_t comp = reach_within(ctx.g, rest, std::countr_zero(rest));
    const std::uint64_t left = comp | ybit;
    const std::uint64_t right = mask & ~comp;  // keeps y and the remaining components

    if ((avoid & ybit) == 0) {
      SizeSet left_need = ddp_sets_rec(ctx, left, (require & left) | ybit, avoid & left);
      SizeSet right_need = ddp_sets_rec(ctx, right, (require & right) | ybit, avoid & right);
      out = out | compose_need_sides(left_need, right_need);
    }
    if ((require & ybit) == 0) {
      if ((require & ~left) == 0) out = out | ddp_sets_rec(ctx, left, require, (avoid & left) | ybit);
      if ((require & ~right) == 0)
        out = out | ddp_sets_rec(ctx, right, require, (avoid & right) | ybit);
    }
  }
  ctx.memo.emplace(key, out);
  return out;
}

}  // namespace

SizeSet compose_ddp(SizeSet need_g, SizeSet need_h, SizeSet avoid_g, SizeSet avoid_h) {
  return compose_need_sides(need_g, need_h) | avoid_g | avoid_h;
}

SeparableSplit split_at_cut_vertex(const Graph& g, int x) {
  g.check_vertex(x);
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "split requires a connected graph");
  const std::uint64_t xbit = std::uint64_t{1} << x;
  const std::uint64_t rest = g.full_mask() & ~xbit;
  const std::uint64_t comp = reach_within(g, rest, std::countr_zero(rest));
  if (comp == rest)
    throw Error(ErrorCode::NotCutVertex, "vertex " + std::to_string(x) + " is not a cut vertex");
  SeparableSplit split;
  split.cut_vertex = x;
  split.left = VertexSet(comp | xbit);
  split.right = VertexSet(g.full_mask() & ~comp);
  return split;
}

SizeSet ddp_via_decomposition(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "decomposition requires a connected graph");
  DecompContext ctx{g, apsp(g), {}};
  return ddp_sets_rec(ctx, g.full_mask(), 0, 0);
}

Graph build_path_join(const PathJoinSpec& spec) {
  spec.g.check_vertex(spec.x);
  spec.h.check_vertex(spec.y);
  if (spec.r < 1) throw Error(ErrorCode::OutOfRange, "path join length must be at least 1");
  const int ng = spec.g.order();
  const int nh = spec.h.order();
  const int total = ng + nh + spec.r - 1;
  if (total > Graph::kMaxVertices)
    throw Error(ErrorCode::TooLarge, "path join would exceed 64 vertices");
  std::vector<std::pair<int, int>> edges = spec.g.edges();
  for (auto [u, v] : spec.h.edges()) edges.emplace_back(u + ng, v + ng);
  int prev = spec.x;
  for (int i = 0; i < spec.r - 1; ++i) {
    edges.emplace_back(prev, ng + nh + i);
    prev = ng + nh + i;
  }
  edges.emplace_back(prev, ng + spec.y);
  return Graph(total, edges);
}

SizeSet path_join_ddp_from_sides(SizeSet need_x, SizeSet avoid_x, SizeSet need_y, SizeSet avoid_y,
                                 int r) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "path join length must be at least 1");
  // Walk the fresh path from y towards x, one edge per step. Prepending an
  // edge to a graph M anchored at p gives, for the new endpoint q:
  //   need_q = {1} ∪ (need_p + 1)   ({q} alone, or {q,p} extended into M)
  //   avoid_q = need_p ∪ avoid_p    (everything inside M)
  // After r steps the endpoint is x itself; the final glue is the plain
  // binary composition.
  SizeSet need = need_y;
  SizeSet avoid = avoid_y;
  for (int i = 0; i < r; ++i) {
    const SizeSet next_need((need.bits << 1) | 1);
    avoid = need | avoid;
    need = next_need;
  }
  return compose_ddp(need_x, need, avoid_x, avoid);
}

SizeSet path_join_ddp_formula(SizeSet need_x, SizeSet need_y, SizeSet avoid_x, SizeSet avoid_y,
                              int r) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "path join length must be at least 1");
  // With t = offset+1 ranging over 0..r, size a+b+t-1 lands on bit
  // (a-1) + (b-1) + t.
  std::uint64_t out = 0;
  for (int b : bits_of(need_y.bits))
    for (int t = 0; t <= r; ++t)
      if (b + t < 64) out |= need_x.bits << (b + t);
  return SizeSet(out) | avoid_x | avoid_y;
}

SizeSet path_join_ddp(const PathJoinSpec& spec) {
  const auto need_x = ddp_constrained(spec.g, {VertexSet(), VertexSet::single(spec.x)}).sizes();
  const auto avoid_x = ddp_constrained(spec.g, {VertexSet::single(spec.x), VertexSet()}).sizes();
  const auto need_y = ddp_constrained(spec.h, {VertexSet(), VertexSet::single(spec.y)}).sizes();
  const auto avoid_y = ddp_constrained(spec.h, {VertexSet::single(spec.y), VertexSet()}).sizes();
  return path_join_ddp_from_sides(need_x, avoid_x, need_y, avoid_y, spec.r);
}

}  // namespace dpg
