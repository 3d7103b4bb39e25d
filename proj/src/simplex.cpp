#include "exg/simplex.hpp"

#include <cstddef>

namespace exg {

namespace {

// Dense tableau with rows 0..m-1 and an objective row m; column layout is
// [structural | slack-or-artificial | rhs].  The objective row stores
// reduced costs; pivoting keeps it priced out.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), t_(m + 1, std::vector<Rational>(cols, Rational(0))) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
    std::size_t rhs() const { return cols_ - 1; }
    std::size_t rows() const { return m_; }
    std::vector<int>& basis() { return basis_; }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / t_[row][col];
        for (auto& v : t_[row]) v *= inv;
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == row) continue;
            const Rational factor = t_[r][col];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) t_[r][c] -= factor * t_[row][c];
        }
        basis_[row] = static_cast<int>(col);
    }

    // Bland: entering = lowest-index column with negative reduced cost,
    // leaving = min ratio, ties by lowest basic variable index.
    // Returns false once optimal.  Throws if unbounded.
    bool bland_step(std::size_t num_vars) {
        std::size_t enter = cols_;
        for (std::size_t c = 0; c < num_vars; ++c) {
            if (t_[m_][c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == cols_) return false;
        std::size_t leave = m_;
        Rational best_ratio;
        for (std::size_t r = 0; r < m_; ++r) {
            if (t_[r][enter] <= 0) continue;
            const Rational ratio = t_[r][rhs()] / t_[r][enter];
            if (leave == m_ || ratio < best_ratio ||
                (ratio == best_ratio && basis_[r] < basis_[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == m_) throw InputError("linear program is unbounded");
        pivot(leave, enter);
        return true;
    }

private:
    std::size_t m_, cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
};

}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b,
                          const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw InputError("rhs length mismatch");
    for (const auto& row : A) {
        if (row.size() != n) throw InputError("constraint row length mismatch");
    }
    for (const auto& bi : b) {
        if (bi < 0) throw InputError("simplex_maximize requires b >= 0");
    }

    Tableau t(m, n + m + 1);
    t.basis().resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) t.at(r, j) = A[r][j];
        t.at(r, n + r) = 1;
        t.at(r, t.rhs()) = b[r];
        t.basis()[r] = static_cast<int>(n + r);
    }
    for (std::size_t j = 0; j < n; ++j) t.at(m, j) = -c[j];

    while (t.bland_step(n + m)) {
    }

    LpResult res;
    res.value = t.at(m, t.rhs());
    res.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        const int bv = t.basis()[r];
        if (bv >= 0 && static_cast<std::size_t>(bv) < n) res.x[static_cast<std::size_t>(bv)] = t.at(r, t.rhs());
    }
    // Duals are the reduced costs of the slack columns.
    res.dual.assign(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) res.dual[r] = t.at(m, n + r);
    return res;
}

LpFeasibility simplex_feasible(const std::vector<std::vector<Rational>>& A,
                               const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw InputError("rhs length mismatch");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A) {
        if (row.size() != n) throw InputError("constraint row length mismatch");
    }
    if (m == 0) return {true, std::vector<Rational>(n, Rational(0)), {}};

    // Normalize rows so b >= 0, remembering the flips for the Farkas vector.
    std::vector<int> sign(m, 1);
    Tableau t(m, n + m + 1);
    t.basis().resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        if (b[r] < 0) sign[r] = -1;
        for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign[r] * A[r][j];
        t.at(r, n + r) = 1;  // artificial
        t.at(r, t.rhs()) = sign[r] * b[r];
        t.basis()[r] = static_cast<int>(n + r);
    }
    // Phase 1: maximize -sum(artificials).  Price out the basic artificials:
    // reduced cost of column j becomes -sum_r T[r][j].
    for (std::size_t j = 0; j < n + m + 1; ++j) {
        Rational s = 0;
        for (std::size_t r = 0; r < m; ++r) s += t.at(r, j);
        t.at(m, j) = -s;
    }
    for (std::size_t r = 0; r < m; ++r) t.at(m, n + r) = 0;  // basic columns price to zero

    while (t.bland_step(n + m)) {
    }

    LpFeasibility res;
    const Rational infeasibility = -t.at(m, t.rhs());
    res.feasible = (infeasibility == 0);
    if (res.feasible) {
        res.solution.assign(n, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            const int bv = t.basis()[r];
            if (bv >= 0 && static_cast<std::size_t>(bv) < n)
                res.solution[static_cast<std::size_t>(bv)] = t.at(r, t.rhs());
        }
    } else {
        // The artificial columns carry B^{-1}, so the phase-1 dual is
        // y_r = redcost_r + c_a = redcost_r - 1.  At optimum y.A_j >= 0 for
        // all columns and y.b < 0; negating and unflipping the row signs
        // gives the certificate in the documented orientation.
        res.farkas.assign(m, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            const Rational y = t.at(m, n + r) - 1;
            res.farkas[r] = -(sign[r] * y);
        }
    }
    return res;
}

}  // namespace exg
