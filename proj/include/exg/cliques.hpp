#pragma once

#include <vector>

#include "exg/graph.hpp"

namespace exg {

// All maximal cliques, each exactly once, sorted lexicographically by
// ascending member list.  Pivoted Bron-Kerbosch over a degeneracy ordering.
// Isolated vertices yield singleton cliques; the empty graph yields none.
std::vector<VertexSet> enumerate_maximal_cliques(const VertexWeightedGraph& g);

// Degeneracy ordering (repeated minimum-degree removal, ties by index).
std::vector<int> degeneracy_order(const VertexWeightedGraph& g);

}  // namespace exg
