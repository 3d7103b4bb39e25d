#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "exg/graph.hpp"
#include "exg/theta.hpp"

namespace exg {

enum class Body { STAB, TH, QSTAB };

const char* body_name(Body b);

struct MembershipVerdict {
    Body body;
    bool inside = false;
    bool boundary = false;
    bool indeterminate = false;  // SDP failed to converge either way
    // Certificates, populated by body and verdict:
    std::vector<std::pair<VertexSet, Rational>> convex_combination;  // STAB, inside
    std::vector<Rational> separating_functional;                     // STAB, outside (y.p + y_n > 0 >= y.x^S + y_n)
    std::optional<VertexSet> violated_clique;                        // QSTAB, outside
    Eigen::MatrixXd feasibility_matrix;                              // TH, inside: the moment matrix M
    Eigen::MatrixXd separating_matrix;                               // TH, outside: PSD dual attestation
    double separation_value = 0;                                     // <F0, separating_matrix> < 0
    double slack = 0;                                                // signed distance proxy used for the verdict
};

// QSTAB: every maximal-clique sum <= 1 + 1e-12, decided in exact arithmetic
// on the (exactly converted) float entries.
MembershipVerdict in_qstab(const VertexWeightedGraph& g, const std::vector<double>& p);

// STAB: p is a convex combination of stable labelings, decided by exact LP
// feasibility over the enumerated stable sets.
MembershipVerdict in_stab(const VertexWeightedGraph& g, const std::vector<double>& p, int cap = 20);

// TH: feasibility of the (n+1)x(n+1) moment matrix M >= 0 with M_00 = 1,
// M_0i = M_ii = p_i, M_ij = 0 on edges; decided through the trace SDP dual.
MembershipVerdict in_th(const VertexWeightedGraph& g, const std::vector<double>& p,
                        const SdpOptions& opts = {});

struct PerfectnessResult {
    bool perfect = true;
    std::optional<VertexSet> witness;  // odd hole or antihole when imperfect
    bool witness_is_antihole = false;
};

// Brute-force induced odd hole / antihole search over all odd subsets of
// size >= 5; first witness by (size, lexicographic) order.
PerfectnessResult is_perfect(const VertexWeightedGraph& g, int cap = 18);

// Confirms the collapse dichotomy: perfect graphs must show
// alpha = alpha* exactly and theta within tol in the all-ones direction and
// `directions` random positive weightings; imperfect graphs must separate in
// at least one probed direction.
bool result3_check(const VertexWeightedGraph& g, double tol = 1e-6, int directions = 200,
                   unsigned long long seed = 20130823ULL);

}  // namespace exg
