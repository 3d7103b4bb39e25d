#include "exg/cliques.hpp"

#include <algorithm>

namespace exg {

namespace {

struct BronKerbosch {
    const VertexWeightedGraph& g;
    std::vector<VertexSet>& out;

    void expand(VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // Pivot: vertex of P|X with most neighbours in P, ties by index.
        int pivot = -1, best = -1;
        for (int u : (p | x).members()) {
            const int cnt = (p & g.neighbors(u)).size();
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        const VertexSet ext = p.minus(g.neighbors(pivot));
        for (int v : ext.members()) {
            VertexSet rv = r;
            rv.insert(v);
            expand(rv, p & g.neighbors(v), x & g.neighbors(v));
            p.erase(v);
            x.insert(v);
        }
    }
};

}  // namespace

std::vector<int> degeneracy_order(const VertexWeightedGraph& g) {
    const int n = g.order();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet remaining = VertexSet::full(n);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v : remaining.members()) {
            if (best == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]) best = v;
        }
        order.push_back(best);
        remaining.erase(best);
        for (int u : (g.neighbors(best) & remaining).members()) --deg[static_cast<std::size_t>(u)];
    }
    return order;
}

std::vector<VertexSet> enumerate_maximal_cliques(const VertexWeightedGraph& g) {
    const int n = g.order();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    const auto order = degeneracy_order(g);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    BronKerbosch bk{g, out};
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        VertexSet p(n), x(n);
        for (int u : g.neighbors(v).members()) {
            if (pos[static_cast<std::size_t>(u)] > i)
                p.insert(u);
            else
                x.insert(u);
        }
        bk.expand(VertexSet::of(n, {v}), p, x);
    }
    std::sort(out.begin(), out.end(), VertexSet::lex_less);
    return out;
}

}  // namespace exg
