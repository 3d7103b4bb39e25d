#pragma once

#include <Eigen/Dense>
#include <vector>

#include "exg/graph.hpp"

namespace exg {

// Unit vectors, one per vertex, orthogonal on every pair adjacent in G
// (the orthonormal-representation-of-the-complement convention), plus a
// unit handle.
struct OrthonormalRepresentation {
    int dim = 0;
    Eigen::VectorXd handle;
    std::vector<Eigen::VectorXd> vectors;
    std::vector<int> degenerate;  // vertices whose vector was null-space filled
};

struct OrViolation {
    int i = -1;  // -1 marks the handle
    int j = -1;  // j == i marks a unit-norm violation
    double value = 0;
};

struct OrCheck {
    bool valid = false;
    std::vector<OrViolation> violations;
};

// Unit norms within tol and <v_i, v_j> = 0 within tol on every edge of g.
OrCheck verify_or(const VertexWeightedGraph& g, const OrthonormalRepresentation& rep,
                  double tol = 1e-8);

// sum_i w_i <handle, v_i>^2.
double or_value(const OrthonormalRepresentation& rep, const std::vector<double>& weights);
double or_value(const OrthonormalRepresentation& rep, const VertexWeightedGraph& g);

// The dimension-3 Lovasz umbrella for the odd cycle C_n: handle (0,0,1),
// v_k = (s cos(2 pi k r / n), s sin(2 pi k r / n), c) with r = (n-1)/2 and
// c^2 = cos(pi/n) / (1 + cos(pi/n)); consecutive vectors are orthogonal and
// the value is the n-cycle quantum bound.
OrthonormalRepresentation umbrella_or(int n);

// Extracts an OR + handle from a (near-)optimal primal witness of the theta
// SDP: Gram factor rows, local orthogonality cleanup, null-space fill for
// zero-projection vertices.
OrthonormalRepresentation or_from_theta_witness(const VertexWeightedGraph& g,
                                                const Eigen::MatrixXd& psd_witness,
                                                double tol = 1e-6);

// p_i = <handle, v_i>^2.
std::vector<double> quantum_assignment(const OrthonormalRepresentation& rep);

}  // namespace exg
