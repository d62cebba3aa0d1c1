#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "idforest/graph.hpp"

namespace idforest {

/// graph6: N(n) followed by the upper triangle x(i,j), i<j, in column order,
/// six bits per byte each offset by 63.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline. Throws
/// ParseError carrying the offending byte offset.
Graph from_graph6(std::string_view text);

/// First line "n m", then m lines "u v" (0-indexed).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace idforest
