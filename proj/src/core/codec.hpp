// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace dpg {

// Edge-list text: header line "n m", then m lines "u v" with 0-based
// endpoints. Parse errors carry the byte offset of the offending token.
std::string emit_edgelist(const Graph& g);
Graph parse_edgelist(std::string_view text);

// graph6: printable 6-bit encoding of the column-major upper-triangular
// adjacency bits, one record per graph. An optional ">>graph6<<" prefix is
// tolerated on parse.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view record);

std::string format_graph(const Graph& g, std::string_view format);
Graph parse_graph(std::string_view text, std::string_view format);

}  // namespace dpg
