#include "exg/bounds.hpp"

#include "exg/cliques.hpp"
#include "exg/independence.hpp"
#include "exg/simplex.hpp"

namespace exg {

std::pair<Rational, VertexSet> independence_number(const VertexWeightedGraph& g, int cap) {
    const StableSetResult r = max_weight_stable_set(g, cap);
    return {r.value, r.set};
}

std::pair<Rational, std::vector<Rational>> fractional_packing_number(const VertexWeightedGraph& g,
                                                                     int cap) {
    const int n = g.order();
    if (n > cap)
        throw CapError("fractional packing capped at n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    if (n == 0) return {Rational(0), {}};

    const auto cliques = enumerate_maximal_cliques(g);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cliques.size());
    for (const auto& c : cliques) {
        std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
        for (int v : c.members()) row[static_cast<std::size_t>(v)] = 1;
        rows.push_back(std::move(row));
    }
    const std::vector<Rational> rhs(cliques.size(), Rational(1));
    const LpResult lp = simplex_maximize(rows, rhs, g.weights());
    return {lp.value, lp.x};
}

BoundsReport bounds_report(const VertexWeightedGraph& g, const SdpOptions& opts) {
    BoundsReport rep;
    auto [alpha, alpha_set] = independence_number(g, opts.cap);
    rep.alpha = alpha;
    rep.alpha_witness = alpha_set;

    const ThetaResult theta = lovasz_theta(g, opts);
    rep.theta_lower = theta.lower;
    rep.theta_upper = theta.upper;
    rep.theta_witness = theta.witness;
    rep.theta_converged = theta.converged;
    rep.theta_iterations = theta.iterations;

    auto [alpha_star, packing] = fractional_packing_number(g, opts.cap);
    rep.alpha_star = alpha_star;
    rep.alpha_star_witness = std::move(packing);

    const double a = to_double(rep.alpha);
    const double as = to_double(rep.alpha_star);
    if (a > rep.theta_upper + opts.tol || rep.theta_lower > as + opts.tol)
        throw std::logic_error("bound ordering violated beyond tolerance; solver bug");
    return rep;
}

}  // namespace exg
