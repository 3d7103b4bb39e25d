#include "exg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace exg {

namespace {

// Iterated colour refinement run jointly on both graphs so colour ids are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const VertexWeightedGraph& g1,
                                                            const VertexWeightedGraph& g2) {
    const int n = g1.order();
    std::vector<int> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        c1[static_cast<std::size_t>(v)] = g1.degree(v);
        c2[static_cast<std::size_t>(v)] = g2.degree(v);
    }
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto signature = [&](const VertexWeightedGraph& g, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v).members()) nb.push_back(c[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            return std::make_pair(c[static_cast<std::size_t>(v)], nb);
        };
        std::vector<int> n1(static_cast<std::size_t>(n)), n2(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g1, c1, v);
            auto it = ids.emplace(sig, static_cast<int>(ids.size())).first;
            n1[static_cast<std::size_t>(v)] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g2, c2, v);
            auto it = ids.emplace(sig, static_cast<int>(ids.size())).first;
            n2[static_cast<std::size_t>(v)] = it->second;
        }
        if (n1 == c1 && n2 == c2) break;
        c1 = std::move(n1);
        c2 = std::move(n2);
    }
    return {c1, c2};
}

struct Matcher {
    const VertexWeightedGraph& g1;
    const VertexWeightedGraph& g2;
    const std::vector<int>& c1;
    const std::vector<int>& c2;
    std::vector<int> order;    // g1 vertices, most-constrained first
    std::vector<int> mapping;  // g1 -> g2, -1 unset
    std::vector<bool> used;

    bool extend(std::size_t k) {
        if (k == order.size()) return true;
        const int v = order[k];
        for (int w = 0; w < g2.order(); ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (c1[static_cast<std::size_t>(v)] != c2[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k; ++j) {
                const int u = order[j];
                if (g1.adjacent(v, u) != g2.adjacent(w, mapping[static_cast<std::size_t>(u)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(k + 1)) return true;
            mapping[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const VertexWeightedGraph& g1,
                                                 const VertexWeightedGraph& g2,
                                                 int cap) {
    if (g1.order() > cap || g2.order() > cap)
        throw CapError("isomorphism test capped at n <= " + std::to_string(cap));
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    const int n = g1.order();
    if (n == 0) return std::vector<int>{};

    auto [c1, c2] = refine_colors(g1, g2);
    {
        auto s1 = c1, s2 = c2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    // Process rare colour classes first.
    std::map<int, int> class_size;
    for (int v = 0; v < n; ++v) ++class_size[c1[static_cast<std::size_t>(v)]];
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int sa = class_size[c1[static_cast<std::size_t>(a)]];
        const int sb = class_size[c1[static_cast<std::size_t>(b)]];
        if (sa != sb) return sa < sb;
        return a < b;
    });

    Matcher m{g1, g2, c1, c2, std::move(order),
              std::vector<int>(static_cast<std::size_t>(n), -1),
              std::vector<bool>(static_cast<std::size_t>(n), false)};
    if (!m.extend(0)) return std::nullopt;
    return m.mapping;
}

bool is_isomorphic(const VertexWeightedGraph& g1, const VertexWeightedGraph& g2, int cap) {
    return find_isomorphism(g1, g2, cap).has_value();
}

}  // namespace exg
