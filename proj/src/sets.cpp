#include "exg/sets.hpp"

#include <algorithm>
#include <random>

#include "exg/bounds.hpp"
#include "exg/cliques.hpp"
#include "exg/simplex.hpp"

namespace exg {

namespace {

constexpr std::size_t kStableSetLimit = 200000;

void check_assignment(const VertexWeightedGraph& g, const std::vector<double>& p) {
    if (static_cast<int>(p.size()) != g.order())
        throw InputError("assignment length " + std::to_string(p.size()) + " does not match graph order " +
                         std::to_string(g.order()));
    for (double v : p) {
        if (!(v >= 0)) throw InputError("assignment entries must be nonnegative");
    }
}

// All stable sets (including the empty set), depth first, include-first.
void enumerate_stable_sets(const VertexWeightedGraph& g, int v, VertexSet current,
                           std::vector<VertexSet>& out) {
    if (out.size() > kStableSetLimit) throw CapError("stable-set enumeration exceeds limit");
    if (v == g.order()) {
        out.push_back(current);
        return;
    }
    if (!current.intersects(g.neighbors(v))) {
        VertexSet with = current;
        with.insert(v);
        enumerate_stable_sets(g, v + 1, with, out);
    }
    enumerate_stable_sets(g, v + 1, current, out);
}

bool is_stable_labeling(const VertexWeightedGraph& g, const std::vector<Rational>& p,
                        VertexSet& support) {
    support = VertexSet(g.order());
    for (int i = 0; i < g.order(); ++i) {
        const auto& v = p[static_cast<std::size_t>(i)];
        if (v == 1)
            support.insert(i);
        else if (v != 0)
            return false;
    }
    for (int i : support.members()) {
        if (support.intersects(g.neighbors(i))) return false;
    }
    return true;
}

}  // namespace

const char* body_name(Body b) {
    switch (b) {
        case Body::STAB: return "STAB";
        case Body::TH: return "TH";
        case Body::QSTAB: return "QSTAB";
    }
    return "?";
}

MembershipVerdict in_qstab(const VertexWeightedGraph& g, const std::vector<double>& p) {
    check_assignment(g, p);
    const Rational tol(1, BigInt("1000000000000"));  // 1e-12 exactly
    std::vector<Rational> pr;
    pr.reserve(p.size());
    for (double v : p) pr.push_back(rational_from_double(v));

    MembershipVerdict verdict;
    verdict.body = Body::QSTAB;
    verdict.inside = true;
    Rational max_sum = 0;
    for (const auto& clique : enumerate_maximal_cliques(g)) {
        Rational sum = 0;
        for (int v : clique.members()) sum += pr[static_cast<std::size_t>(v)];
        if (sum > max_sum) max_sum = sum;
        if (sum > 1 + tol) {
            verdict.inside = false;
            verdict.violated_clique = clique;
            verdict.slack = to_double(Rational(1) - sum);
            return verdict;
        }
    }
    verdict.boundary = (max_sum >= 1 - tol);
    verdict.slack = to_double(Rational(1) - max_sum);
    return verdict;
}

MembershipVerdict in_stab(const VertexWeightedGraph& g, const std::vector<double>& p, int cap) {
    check_assignment(g, p);
    const int n = g.order();
    if (n > cap) throw CapError("STAB membership capped at n <= " + std::to_string(cap));

    std::vector<Rational> pr;
    pr.reserve(p.size());
    for (double v : p) pr.push_back(rational_from_double(v));

    MembershipVerdict verdict;
    verdict.body = Body::STAB;

    VertexSet support(n);
    if (is_stable_labeling(g, pr, support)) {
        verdict.inside = true;
        verdict.boundary = true;  // vertices of the polytope
        verdict.convex_combination.emplace_back(support, Rational(1));
        return verdict;
    }

    std::vector<VertexSet> stable_sets;
    enumerate_stable_sets(g, 0, VertexSet(n), stable_sets);

    // Feasibility of: sum_S lambda_S x^S = p, sum_S lambda_S = 1, lambda >= 0.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(stable_sets.size(), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t s = 0; s < stable_sets.size(); ++s) {
        for (int v : stable_sets[s].members()) rows[static_cast<std::size_t>(v)][s] = 1;
        rows[static_cast<std::size_t>(n)][s] = 1;
    }
    for (int v = 0; v < n; ++v) rhs[static_cast<std::size_t>(v)] = pr[static_cast<std::size_t>(v)];
    rhs[static_cast<std::size_t>(n)] = 1;

    const LpFeasibility feas = simplex_feasible(rows, rhs);
    verdict.inside = feas.feasible;
    if (feas.feasible) {
        for (std::size_t s = 0; s < stable_sets.size(); ++s) {
            if (feas.solution[s] != 0) verdict.convex_combination.emplace_back(stable_sets[s], feas.solution[s]);
        }
        // Boundary probe: does a slightly scaled-up copy escape the polytope?
        bool at_boundary = false;
        const Rational bump = 1 + Rational(1, BigInt("1000000000000"));
        std::vector<Rational> scaled = pr;
        bool all_zero = true;
        for (auto& v : scaled) {
            v *= bump;
            if (v != 0) all_zero = false;
        }
        if (!all_zero) {
            std::vector<Rational> rhs2 = rhs;
            for (int v = 0; v < n; ++v) rhs2[static_cast<std::size_t>(v)] = scaled[static_cast<std::size_t>(v)];
            at_boundary = !simplex_feasible(rows, rhs2).feasible;
        }
        verdict.boundary = at_boundary;
    } else {
        verdict.separating_functional = feas.farkas;
    }
    return verdict;
}

MembershipVerdict in_th(const VertexWeightedGraph& g, const std::vector<double>& p,
                        const SdpOptions& opts) {
    check_assignment(g, p);
    const int n = g.order();
    MembershipVerdict verdict;
    verdict.body = Body::TH;
    if (n == 0) {
        verdict.inside = true;
        verdict.feasibility_matrix = Eigen::MatrixXd::Ones(1, 1);
        return verdict;
    }

    // Moment-matrix feasibility: M(y) = F0 + sum_f y_f F_f over the free
    // (non-edge) entries; feasible iff t* = max { lambda_min(M(y)) } >= 0.
    // By conic duality t* is the optimum of min <F0, X> over the trace-one
    // spectrahedron vanishing at the free pairs, which the trace SDP solves.
    Eigen::MatrixXd f0 = Eigen::MatrixXd::Zero(n + 1, n + 1);
    f0(0, 0) = 1.0;
    for (int i = 0; i < n; ++i) {
        f0(0, i + 1) = p[static_cast<std::size_t>(i)];
        f0(i + 1, 0) = p[static_cast<std::size_t>(i)];
        f0(i + 1, i + 1) = p[static_cast<std::size_t>(i)];
    }
    TraceSdp dual_problem;
    dual_problem.n = n + 1;
    dual_problem.objective = -f0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) dual_problem.zero_pairs.emplace_back(i + 1, j + 1);
        }
    }

    SdpOptions inner = opts;
    inner.tol = std::min(opts.tol * 0.1, 1e-7);
    inner.cap = std::max(opts.cap, n + 1);
    const SdpSolution sol = solve_trace_sdp(dual_problem, inner);

    // max <-F0, X> in [lower, upper]  =>  t* in [-upper, -lower].
    const double t_low = -sol.upper;
    const double t_high = -sol.lower;
    const double t_mid = 0.5 * (t_low + t_high);
    verdict.slack = t_mid;

    if (!sol.converged && t_low < -opts.tol && t_high >= -opts.tol) {
        verdict.indeterminate = true;  // bracket straddles the verdict boundary
        return verdict;
    }

    verdict.inside = (t_mid >= -opts.tol);
    verdict.boundary = (std::abs(t_mid) <= opts.tol);
    if (verdict.inside) {
        // M = F0 + sum y_f F_f from the dual multipliers: fixed entries are
        // exact, and lambda_min(M) >= -y_trace-shift >= t* - gap >= -tol.
        Eigen::MatrixXd m_cert = f0;
        for (std::size_t k = 0; k < dual_problem.zero_pairs.size(); ++k) {
            const auto [i, j] = dual_problem.zero_pairs[k];
            m_cert(i, j) = sol.dual_y(static_cast<Eigen::Index>(k));
            m_cert(j, i) = sol.dual_y(static_cast<Eigen::Index>(k));
        }
        verdict.feasibility_matrix = m_cert;
    } else {
        // X >= 0 with trace 1, vanishing on free pairs and <F0, X> < 0:
        // every feasible M would need <X, M> = <X, F0> < 0, impossible.
        verdict.separating_matrix = sol.primal;
        verdict.separation_value = -sol.lower;
    }
    return verdict;
}

PerfectnessResult is_perfect(const VertexWeightedGraph& g, int cap) {
    const int n = g.order();
    if (n > cap) throw CapError("perfectness check capped at n <= " + std::to_string(cap));
    PerfectnessResult res;
    if (n < 5) return res;

    const VertexWeightedGraph gc = complement(g);
    std::vector<int> subset;

    // Is the subset an induced cycle of h?  Degrees exactly 2 and connected.
    auto induced_cycle = [&](const VertexWeightedGraph& h) {
        VertexSet mask(n);
        for (int v : subset) mask.insert(v);
        for (int v : subset) {
            if ((h.neighbors(v) & mask).size() != 2) return false;
        }
        VertexSet seen(n);
        VertexSet frontier(n);
        frontier.insert(subset[0]);
        seen.insert(subset[0]);
        while (!frontier.empty()) {
            VertexSet next(n);
            for (int v : frontier.members()) {
                next = next | (h.neighbors(v) & mask).minus(seen);
            }
            seen = seen | next;
            frontier = next;
        }
        return seen == mask;
    };

    std::optional<VertexSet> witness;
    bool antihole = false;
    // Ascending odd sizes, lexicographic subsets: first witness is minimal.
    for (int k = 5; k <= n && !witness; k += 2) {
        subset.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (induced_cycle(g)) {
                witness = VertexSet(n);
                for (int v : subset) witness->insert(v);
                antihole = false;
                break;
            }
            if (k >= 7 && induced_cycle(gc)) {
                witness = VertexSet(n);
                for (int v : subset) witness->insert(v);
                antihole = true;
                break;
            }
            // Next k-combination of {0..n-1}.
            int i = k - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    if (witness) {
        res.perfect = false;
        res.witness = witness;
        res.witness_is_antihole = antihole;
    }
    return res;
}

bool result3_check(const VertexWeightedGraph& g, double tol, int directions,
                   unsigned long long seed) {
    const int n = g.order();
    if (n > 14) throw CapError("result3_check capped at n <= 14");
    if (n == 0) return true;
    const bool perfect = is_perfect(g).perfect;

    std::mt19937_64 rng(seed);
    auto random_weights = [&]() {
        std::vector<Rational> w(static_cast<std::size_t>(n));
        for (auto& wi : w) wi = Rational(4 + static_cast<int>(rng() % 17), 4);  // in [1, 5]
        return w;
    };

    SdpOptions opts;
    opts.tol = std::min(tol, 1e-6);
    for (int d = 0; d <= directions; ++d) {
        const VertexWeightedGraph h = (d == 0) ? g : g.with_weights(random_weights());
        const auto [alpha, aw] = independence_number(h);
        const auto [alpha_star, pw] = fractional_packing_number(h);
        const ThetaResult th = lovasz_theta(h, opts);
        const double a = to_double(alpha);
        const double as = to_double(alpha_star);
        if (perfect) {
            const bool collapsed = (alpha == alpha_star) && (th.upper >= a - tol) && (th.lower <= a + tol);
            if (!collapsed) return false;
        } else {
            const bool separated = (th.lower - a > tol) || (as - th.upper > tol);
            if (separated) return true;
        }
    }
    return perfect;  // perfect: every direction collapsed; imperfect: none separated
}

}  // namespace exg
