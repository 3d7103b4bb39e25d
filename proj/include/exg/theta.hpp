#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "exg/graph.hpp"

namespace exg {

struct SdpOptions {
    double tol = 1e-6;   // required width of the [lower, upper] bracket
    int max_iter = 500;  // interior-point iteration budget
    int cap = 64;        // largest admissible graph order
};

// Trace-normalized SDP:  maximize <C, X>  subject to
//   X symmetric PSD, trace(X) = 1, X_ij = 0 for every (i,j) in zero_pairs.
struct TraceSdp {
    int n = 0;
    std::vector<std::pair<int, int>> zero_pairs;
    Eigen::MatrixXd objective;
};

struct SdpSolution {
    double lower = 0;  // <C, X> at a certified-feasible primal point
    double upper = 0;  // dual objective after perturbing to exact feasibility
    Eigen::MatrixXd primal;      // cleaned feasible X (the lower-bound witness)
    Eigen::VectorXd dual_y;      // one entry per zero pair, then the trace multiplier
    Eigen::MatrixXd dual_slack;  // Z = A^T(y) - C >= 0 after perturbation
    int iterations = 0;
    bool converged = false;  // bracket width <= tol
};

// Dense primal-dual path-following interior point (Helmberg-Rendl-style
// Newton system) with a projection/shift cleanup that turns the final
// iterates into rigorous lower and upper bounds.
SdpSolution solve_trace_sdp(const TraceSdp& problem, const SdpOptions& opts = {});

struct ThetaResult {
    double lower = 0;
    double upper = 0;
    Eigen::MatrixXd witness;  // feasible primal X of the theta program
    int iterations = 0;
    bool converged = false;
};

// Lovasz number of (G,w):  max <W, X> with W_ij = sqrt(w_i w_j) over the
// trace-one spectrahedron vanishing on the edges of G.
ThetaResult lovasz_theta(const VertexWeightedGraph& g, const SdpOptions& opts = {});

}  // namespace exg
