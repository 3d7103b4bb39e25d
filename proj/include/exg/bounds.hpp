#pragma once

#include <utility>
#include <vector>

#include "exg/graph.hpp"
#include "exg/theta.hpp"

namespace exg {

// The classical / quantum / E1 bound triple with witnesses.
struct BoundsReport {
    Rational alpha;
    VertexSet alpha_witness;
    double theta_lower = 0;
    double theta_upper = 0;
    Eigen::MatrixXd theta_witness;
    bool theta_converged = true;
    int theta_iterations = 0;
    Rational alpha_star;
    std::vector<Rational> alpha_star_witness;  // per-vertex fractional assignment
};

// Exact maximum-weight stable set value and witness.
std::pair<Rational, VertexSet> independence_number(const VertexWeightedGraph& g, int cap = 64);

// Exact LP optimum of sum w_i p_i over p >= 0 with sum_{i in C} p_i <= 1
// for every maximal clique C; rational simplex over the clique rows.
std::pair<Rational, std::vector<Rational>> fractional_packing_number(const VertexWeightedGraph& g,
                                                                     int cap = 64);

// Runs all three computations and asserts the ordering
// alpha <= theta_upper + tol and theta_lower <= alpha* + tol before returning.
BoundsReport bounds_report(const VertexWeightedGraph& g, const SdpOptions& opts = {});

}  // namespace exg
