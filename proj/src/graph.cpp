#include "exg/graph.hpp"

#include <algorithm>
#include <bit>

namespace exg {

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

VertexSet::VertexSet(int capacity) : n_(capacity), bits_(word_count(capacity), 0) {
    if (capacity < 0) throw InputError("negative vertex-set capacity");
}

VertexSet VertexSet::of(int capacity, std::initializer_list<int> members) {
    VertexSet s(capacity);
    for (int v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int capacity) {
    VertexSet s(capacity);
    for (int v = 0; v < capacity; ++v) s.insert(v);
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

void VertexSet::insert(int v) {
    check(v);
    bits_[v / kWordBits] |= (std::uint64_t{1} << (v % kWordBits));
}

void VertexSet::erase(int v) {
    check(v);
    bits_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (bits_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

int VertexSet::size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        std::uint64_t w = bits_[wi];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi) * kWordBits + b);
            w &= w - 1;
        }
    }
    return out;
}

int VertexSet::front() const {
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        if (bits_[wi]) return static_cast<int>(wi) * kWordBits + std::countr_zero(bits_[wi]);
    }
    return -1;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] & o.bits_[i]) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] & ~o.bits_[i]) return false;
    }
    return true;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

VertexWeightedGraph VertexWeightedGraph::from_edge_list(int n,
                                                        const std::vector<std::pair<int, int>>& edges,
                                                        const std::vector<Rational>& weights) {
    if (n < 0) throw InputError("negative vertex count");
    VertexWeightedGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    if (weights.empty()) {
        g.weights_.assign(static_cast<std::size_t>(n), Rational(1));
    } else {
        if (static_cast<int>(weights.size()) != n)
            throw InputError("weight list length " + std::to_string(weights.size()) +
                             " does not match vertex count " + std::to_string(n));
        for (const auto& w : weights) {
            if (w <= 0) throw InputError("nonpositive vertex weight " + format_rational(w));
        }
        g.weights_ = weights;
    }
    return g;
}

std::size_t VertexWeightedGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<std::size_t>(nb.size());
    return deg_sum / 2;
}

bool VertexWeightedGraph::adjacent(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("vertex out of range");
    return adj_[static_cast<std::size_t>(i)].contains(j);
}

const VertexSet& VertexWeightedGraph::neighbors(int i) const {
    if (i < 0 || i >= n_) throw InputError("vertex out of range");
    return adj_[static_cast<std::size_t>(i)];
}

int VertexWeightedGraph::degree(int i) const { return neighbors(i).size(); }

const Rational& VertexWeightedGraph::weight(int i) const {
    if (i < 0 || i >= n_) throw InputError("vertex out of range");
    return weights_[static_cast<std::size_t>(i)];
}

Rational VertexWeightedGraph::total_weight() const {
    Rational t = 0;
    for (const auto& w : weights_) t += w;
    return t;
}

std::vector<std::pair<int, int>> VertexWeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
        for (int j : adj_[static_cast<std::size_t>(i)].members()) {
            if (j > i) out.emplace_back(i, j);
        }
    }
    return out;
}

VertexWeightedGraph VertexWeightedGraph::with_weights(std::vector<Rational> w) const {
    return from_edge_list(n_, edges(), w);
}

VertexWeightedGraph complement(const VertexWeightedGraph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
        }
    }
    return VertexWeightedGraph::from_edge_list(n, edges, g.weights());
}

VertexWeightedGraph circulant(int n, const std::vector<int>& jumps) {
    if (n < 3) throw InputError("circulant graphs need n >= 3");
    if (jumps.empty()) throw InputError("empty jump set");
    for (int j : jumps) {
        if (j < 1 || j > n / 2) throw InputError("jump " + std::to_string(j) + " outside 1..n/2");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j : jumps) {
            const int k = (i + j) % n;
            edges.emplace_back(std::min(i, k), std::max(i, k));
        }
    }
    // A jump of exactly n/2 generates each of its edges from both endpoints.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return VertexWeightedGraph::from_edge_list(n, edges);
}

VertexWeightedGraph cycle_graph(int n) { return circulant(n, {1}); }

VertexWeightedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return VertexWeightedGraph::from_edge_list(n, edges);
}

VertexWeightedGraph induced_subgraph(const VertexWeightedGraph& g, const VertexSet& keep) {
    const auto kept = keep.members();
    for (int v : kept) {
        if (v >= g.order()) throw InputError("kept vertex " + std::to_string(v) + " out of range");
    }
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t k = 0; k < kept.size(); ++k) new_index[static_cast<std::size_t>(kept[k])] = static_cast<int>(k);
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;
    weights.reserve(kept.size());
    for (int v : kept) weights.push_back(g.weight(v));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = a + 1; b < kept.size(); ++b) {
            if (g.adjacent(kept[a], kept[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return VertexWeightedGraph::from_edge_list(static_cast<int>(kept.size()), edges, weights);
}

}  // namespace exg
