#pragma once

#include <utility>

#include "exg/graph.hpp"

namespace exg {

struct StableSetResult {
    Rational value;
    VertexSet set;
};

// Exact maximum-weight stable set by branch and bound: greedy-clique-cover
// upper bound, branching on the heaviest remaining vertex (ties by lowest
// index).  Deterministic; the witness is the first optimum encountered.
StableSetResult max_weight_stable_set(const VertexWeightedGraph& g, int cap = 64);

}  // namespace exg
