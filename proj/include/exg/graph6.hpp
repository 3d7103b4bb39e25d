#pragma once

#include <string>

#include "exg/graph.hpp"

namespace exg {

// Standard graph6 encoding (McKay): optional ">>graph6<<" header, 6-bit
// characters in [63,126], upper-triangle adjacency bits ordered
// x(0,1), x(0,2), x(1,2), x(0,3), ...  Decoding is bit-exact and strict:
// wrong length, characters outside the range, or nonzero padding bits are
// rejected.  Resulting graphs carry unit weights.
VertexWeightedGraph parse_graph6(const std::string& text);

std::string encode_graph6(const VertexWeightedGraph& g);

}  // namespace exg
