#include "exg/independence.hpp"

#include <algorithm>

namespace exg {

namespace {

struct Solver {
    const VertexWeightedGraph& g;
    std::vector<int> order;           // weight desc, index asc
    std::vector<VertexSet> non_nbrs;  // complement adjacency minus self
    Rational best = 0;
    VertexSet best_set;

    // Greedy clique cover of P in branching order; since vertices arrive in
    // nonincreasing weight the clique opener carries the clique maximum.
    Rational cover_bound(const VertexSet& p) const {
        Rational bound = 0;
        std::vector<VertexSet> cliques;
        for (int v : order) {
            if (!p.contains(v)) continue;
            bool placed = false;
            for (auto& c : cliques) {
                if (c.is_subset_of(g.neighbors(v))) {
                    c.insert(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                VertexSet c(g.order());
                c.insert(v);
                cliques.push_back(std::move(c));
                bound += g.weight(v);
            }
        }
        return bound;
    }

    void recurse(const VertexSet& p, const Rational& current, const VertexSet& chosen) {
        if (p.empty()) {
            if (current > best) {
                best = current;
                best_set = chosen;
            }
            return;
        }
        if (current + cover_bound(p) <= best) return;
        int v = -1;
        for (int u : order) {
            if (p.contains(u)) {
                v = u;
                break;
            }
        }
        // Include v first: heavier sets early tighten the bound.
        VertexSet with_v = chosen;
        with_v.insert(v);
        VertexSet p_in = p & non_nbrs[static_cast<std::size_t>(v)];
        recurse(p_in, current + g.weight(v), with_v);
        VertexSet p_out = p;
        p_out.erase(v);
        recurse(p_out, current, chosen);
    }
};

}  // namespace

StableSetResult max_weight_stable_set(const VertexWeightedGraph& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw CapError("independence number capped at n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    Solver s{g, {}, {}, Rational(0), VertexSet(n)};
    s.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s.order[static_cast<std::size_t>(v)] = v;
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
        return a < b;
    });
    s.non_nbrs.reserve(static_cast<std::size_t>(n));
    const VertexSet all = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
        VertexSet nn = all.minus(g.neighbors(v));
        nn.erase(v);
        s.non_nbrs.push_back(std::move(nn));
    }
    s.recurse(all, Rational(0), VertexSet(n));
    return {s.best, s.best_set};
}

}  // namespace exg
