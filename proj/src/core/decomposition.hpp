// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "core/graph.hpp"
#include "core/isometry.hpp"

namespace dpg {

// A separable graph cut apart at x: left and right overlap exactly in x and
// have no edges between their remainders. When removing x leaves three or
// more components, right aggregates everything but the first.
struct SeparableSplit {
  int cut_vertex = -1;
  VertexSet left;
  VertexSet right;
};

SeparableSplit split_at_cut_vertex(const Graph& g, int x);

// ddp of two graphs glued at a shared vertex, from the four one-sided sets:
// (need_g + need_h + {-1}) ∪ avoid_g ∪ avoid_h, where "need" sets count
// isometric subgraphs through the shared vertex and "avoid" sets those away
// from it. Sums beyond order 64 are dropped.
SizeSet compose_ddp(SizeSet need_g, SizeSet need_h, SizeSet avoid_g, SizeSet avoid_h);

// ddp computed by recursive cut-vertex splitting, falling back to direct
// subset enumeration on pieces without a cut vertex. Must agree with
// dp_profile(g).ddp() on every connected graph.
SizeSet ddp_via_decomposition(const Graph& g);

struct PathJoinSpec {
  Graph g;
  int x;
  Graph h;
  int y;
  int r;  // path length in edges, >= 1
};

// Disjoint copies of g and h joined by a fresh path of r edges from x to y.
// Vertices: g first, then h shifted by |g|, then the r-1 path interiors.
Graph build_path_join(const PathJoinSpec& spec);

// Exact ddp of the joined graph from the four anchored side sets, obtained
// by prepending the path one edge at a time with the binary compose rule.
SizeSet path_join_ddp_from_sides(SizeSet need_x, SizeSet avoid_x, SizeSet need_y, SizeSet avoid_y,
                                 int r);

// Closed form (need_x + need_y + {-1, 0, ..., r-1}) ∪ avoid_x ∪ avoid_y.
// Coincides with the exact composition whenever the anchored side sets are
// gap-free ranges {1..m}; overshoots otherwise (see the C5 join tests), so
// path_join_ddp does not use it.
SizeSet path_join_ddp_formula(SizeSet need_x, SizeSet need_y, SizeSet avoid_x, SizeSet avoid_y, int r);

// Convenience wrapper computing the four side sets by enumeration.
SizeSet path_join_ddp(const PathJoinSpec& spec);

}  // namespace dpg
