#pragma once

#include <string>
#include <string_view>

#include "sysgraph/graph.hpp"

namespace sysgraph {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses one graph6 line (single-byte and '~'-prefixed 3-byte size headers,
/// i.e. n <= 258047). Rejects sparse6 (':' prefix), bytes outside 63..126,
/// truncated input, and non-zero padding bits.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding of g (requires g.order() <= 258047).
std::string to_graph6(const Graph& g);

/// Parses an edge list: one "u v" pair per line, optionally preceded by a line
/// holding a single integer vertex count. Blank lines and '#' comments are
/// skipped. Duplicate edges collapse; self-loops and out-of-range ids throw.
Graph parse_edge_list(std::string_view text);

}  // namespace sysgraph
