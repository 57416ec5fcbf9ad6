// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0

#include "core/codec.hpp"

#include <charconv>

#include "core/families.hpp"

namespace dpg {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

[[noreturn]] void parse_fail(std::string reason, std::size_t offset) {
  throw Error(ErrorCode::Parse, reason + " at byte " + std::to_string(offset), offset);
}

struct TokenReader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  std::size_t next_token_pos() {
    skip_space();
    return pos;
  }

  long read_int(const char* what) {
    skip_space();
    if (pos == text.size()) parse_fail(std::string("expected ") + what + ", found end of input", pos);
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      parse_fail(std::string("expected ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

}  // namespace

std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_edgelist(std::string_view text) {
  TokenReader reader{text};
  const std::size_t header_pos = reader.next_token_pos();
  const long n = reader.read_int("vertex count");
  const long m = reader.read_int("edge count");
  if (n < 1) parse_fail("vertex count must be at least 1", header_pos);
  if (n > Graph::kMaxVertices) parse_fail("vertex count exceeds the supported maximum of 64", header_pos);
  if (m < 0) parse_fail("edge count must be non-negative", header_pos);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    const std::size_t edge_pos = reader.next_token_pos();
    const long u = reader.read_int("edge endpoint");
    const long v = reader.read_int("edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n) parse_fail("edge endpoint out of range", edge_pos);
    if (u == v) parse_fail("self-loop", edge_pos);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!reader.at_end()) parse_fail("trailing input after edge list", reader.pos);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // Column-major upper triangle, packed big-endian into 6-bit chunks and
  // zero-padded at the tail.
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view record) {
  std::size_t pos = 0;
  if (record.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) pos = kGraph6Prefix.size();
  if (pos == record.size()) parse_fail("empty graph6 record", pos);

  auto need_byte = [&](const char* what) -> int {
    if (pos >= record.size()) parse_fail(std::string("truncated graph6 record, expected ") + what, pos);
    const unsigned char c = static_cast<unsigned char>(record[pos]);
    if (c < 63 || c > 126) parse_fail("graph6 byte out of printable range", pos);
    ++pos;
    return c - 63;
  };

  long n;
  if (static_cast<unsigned char>(record[pos]) == '~') {
    ++pos;
    if (pos < record.size() && static_cast<unsigned char>(record[pos]) == '~')
      parse_fail("graph order beyond the supported maximum of 64", pos);
    long a = need_byte("order byte");
    long b = need_byte("order byte");
    long c = need_byte("order byte");
    n = (a << 12) | (b << 6) | c;
  } else {
    n = need_byte("order byte");
  }
  if (n < 1) parse_fail("graph6 record encodes an empty graph", 0);
  if (n > Graph::kMaxVertices) parse_fail("graph order beyond the supported maximum of 64", 0);

  const int nbits = edge_bit_count(static_cast<int>(n));
  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 1, idx = 0;
  for (int group = 0; group * 6 < nbits; ++group) {
    const int chunk = need_byte("adjacency byte");
    for (int b = 0; b < 6; ++b, ++idx) {
      const int bit = (chunk >> (5 - b)) & 1;
      if (idx < nbits) {
        if (bit) edges.emplace_back(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        parse_fail("nonzero padding bits in graph6 record", pos - 1);
      }
    }
  }
  if (pos != record.size()) parse_fail("trailing bytes after graph6 record", pos);
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g, std::string_view format) {
  if (format == "edgelist") return emit_edgelist(g);
  if (format == "graph6") return emit_graph6(g);
  throw Error(ErrorCode::InvalidArgument, "unknown format: " + std::string(format));
}

Graph parse_graph(std::string_view text, std::string_view format) {
  if (format == "edgelist") return parse_edgelist(text);
  if (format == "graph6") {
    // Accept surrounding whitespace; a record is a single line.
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) parse_fail("empty graph6 record", 0);
    std::size_t end = text.find_first_of(" \t\r\n", begin);
    if (end == std::string_view::npos) end = text.size();
    if (text.find_first_not_of(" \t\r\n", end) != std::string_view::npos)
      parse_fail("more than one graph6 record", end);
    return parse_graph6(text.substr(begin, end - begin));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format: " + std::string(format));
}

}  // namespace dpg
