#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "exg/rational.hpp"

namespace exg {

// Subset of {0..n-1} with bitset semantics.  Capacity is fixed at
// construction and must match the graph the set refers to.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity);
    static VertexSet of(int capacity, std::initializer_list<int> members);
    static VertexSet full(int capacity);

    int capacity() const { return n_; }
    void insert(int v);
    void erase(int v);
    bool contains(int v) const;
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<int> members() const;
    int front() const;  // lowest member, -1 if empty

    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator|(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Orders sets as their ascending member lists; used to make clique
    // enumerations and witnesses reproducible.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

private:
    void check(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Simple undirected graph with strictly positive rational vertex weights.
// Immutable after construction; all operations are pure.
class VertexWeightedGraph {
public:
    VertexWeightedGraph() = default;

    // Missing weights default to 1 (the unit-weight convention).
    static VertexWeightedGraph from_edge_list(int n,
                                              const std::vector<std::pair<int, int>>& edges,
                                              const std::vector<Rational>& weights = {});

    int order() const { return n_; }
    std::size_t edge_count() const;
    bool adjacent(int i, int j) const;
    const VertexSet& neighbors(int i) const;
    int degree(int i) const;
    const Rational& weight(int i) const;
    const std::vector<Rational>& weights() const { return weights_; }
    Rational total_weight() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (i<j)

    VertexWeightedGraph with_weights(std::vector<Rational> w) const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Rational> weights_;
};

VertexWeightedGraph complement(const VertexWeightedGraph& g);
VertexWeightedGraph cycle_graph(int n);
VertexWeightedGraph circulant(int n, const std::vector<int>& jumps);
VertexWeightedGraph complete_graph(int n);

// Kept vertices are reindexed densely in ascending order; adjacency and
// weights restrict.
VertexWeightedGraph induced_subgraph(const VertexWeightedGraph& g, const VertexSet& keep);

}  // namespace exg
