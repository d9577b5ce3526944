#pragma once

#include <string>
#include <string_view>

#include "rankvc/graph.hpp"

namespace rankvc {

/// Reads the DIMACS edge format: optional "c" comment lines, one
/// "p edge <n> <m>" header, then exactly m "e <u> <v>" lines with
/// 1-based endpoints. Vertex identifiers are the DIMACS numbers 1..n.
/// Throws ParseError on any malformed line, out-of-range endpoint,
/// self-loop, duplicate edge, edge-count mismatch, or a vertex count above
/// 2^20.
Graph parse_dimacs(std::string_view text);

/// Canonical DIMACS text: vertices renumbered 1..n in ascending id order,
/// edges in lexicographic order, LF line endings.
std::string emit_dimacs(const Graph& g);

}  // namespace rankvc
