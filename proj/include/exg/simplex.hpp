#pragma once

#include <vector>

#include "exg/rational.hpp"

namespace exg {

struct LpResult {
    Rational value;
    std::vector<Rational> x;     // primal optimum
    std::vector<Rational> dual;  // one multiplier per row, >= 0, proves optimality
};

// max c.x  s.t.  Ax <= b, x >= 0, with b >= 0 so the slack basis starts
// feasible.  Dense tableau, Bland's rule, exact rational arithmetic.
// Throws InputError on shape errors and on b < 0; throws on unbounded LPs.
LpResult simplex_maximize(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b,
                          const std::vector<Rational>& c);

struct LpFeasibility {
    bool feasible;
    std::vector<Rational> solution;  // a basic feasible point when feasible
    // When infeasible: y with y.b > 0 and y.A_j <= 0 for every column j.
    std::vector<Rational> farkas;
};

// Phase-1 test for {x >= 0 : Ax = b}.  Rows with negative b are negated
// internally.
LpFeasibility simplex_feasible(const std::vector<std::vector<Rational>>& A,
                               const std::vector<Rational>& b);

}  // namespace exg
