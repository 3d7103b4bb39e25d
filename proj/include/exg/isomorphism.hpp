#pragma once

#include <optional>
#include <vector>

#include "exg/graph.hpp"

namespace exg {

// Adjacency-preserving bijection g1 -> g2 when one exists; weights ignored.
// Vertex-invariant colour refinement plus backtracking; intended for the
// Fig.-1-scale assertions, capped at n <= 16.
std::optional<std::vector<int>> find_isomorphism(const VertexWeightedGraph& g1,
                                                 const VertexWeightedGraph& g2,
                                                 int cap = 16);

bool is_isomorphic(const VertexWeightedGraph& g1, const VertexWeightedGraph& g2, int cap = 16);

}  // namespace exg
