#include "exg/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exg {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double min_eigenvalue(const MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_positive_definite(const MatrixXd& m) {
    Eigen::LLT<MatrixXd> llt(m);
    return llt.info() == Eigen::Success;
}

// Largest step in (0,1] keeping base + step*dir positive definite.
double psd_line_search(const MatrixXd& base, const MatrixXd& dir) {
    double step = 1.0;
    while (step > 1e-12 && !is_positive_definite(base + step * dir)) step *= 0.8;
    if (step <= 1e-12) return 0.0;
    if (step < 1.0) step *= 0.95;  // stay away from the boundary
    return step;
}

// Z = A^T(y) - C for the pair/trace constraint family.
MatrixXd dual_slack_from(const TraceSdp& p, const VectorXd& y) {
    const int n = p.n;
    MatrixXd z = -p.objective;
    for (std::size_t k = 0; k < p.zero_pairs.size(); ++k) {
        const auto [i, j] = p.zero_pairs[k];
        z(i, j) += y(static_cast<Eigen::Index>(k));
        z(j, i) += y(static_cast<Eigen::Index>(k));
    }
    z.diagonal().array() += y(static_cast<Eigen::Index>(p.zero_pairs.size()));
    return z;
}

// Zero the constrained entries, symmetrize, normalize the trace.
MatrixXd project_affine(const TraceSdp& p, MatrixXd x) {
    x = ((x + x.transpose()) / 2.0).eval();
    for (const auto& [i, j] : p.zero_pairs) {
        x(i, j) = 0.0;
        x(j, i) = 0.0;
    }
    const double tr = x.trace();
    if (std::abs(tr) > 1e-300) x /= tr;
    return x;
}

// Make the projected iterate exactly certifiable: shift up by any negative
// eigenvalue (diagonal only, so the zero pattern survives) and renormalize.
MatrixXd certify_primal(const TraceSdp& p, MatrixXd x) {
    x = project_affine(p, std::move(x));
    const double guard = 64.0 * std::numeric_limits<double>::epsilon() * p.n;
    const double lmin = min_eigenvalue(x);
    if (lmin < guard) {
        x.diagonal().array() += (guard - lmin);
        x /= x.trace();
    }
    return x;
}

// Alternating projections between the PSD cone and the affine slice; used
// when the plain projection of the final iterate loses too much objective.
MatrixXd refine_primal(const TraceSdp& p, MatrixXd x, int rounds = 6) {
    for (int r = 0; r < rounds; ++r) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(x);
        const VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
        x = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
        x = project_affine(p, std::move(x));
    }
    return x;
}

}  // namespace

SdpSolution solve_trace_sdp(const TraceSdp& p, const SdpOptions& opts) {
    const int n = p.n;
    if (n <= 0) throw InputError("SDP needs n >= 1");
    if (opts.tol <= 0) throw InputError("tolerance must be positive");
    const std::size_t m_pairs = p.zero_pairs.size();
    const Eigen::Index m = static_cast<Eigen::Index>(m_pairs) + 1;
    const MatrixXd& c = p.objective;

    MatrixXd x = MatrixXd::Identity(n, n) / n;
    VectorXd y = VectorXd::Zero(m);
    // Gershgorin bound keeps the initial dual slack positive definite.
    double lam_max = 0;
    for (int i = 0; i < n; ++i) lam_max = std::max(lam_max, c.row(i).cwiseAbs().sum());
    y(m - 1) = lam_max + 1.0;
    MatrixXd z = dual_slack_from(p, y);

    double mu = z.cwiseProduct(x).sum() / (2.0 * n);
    double phi = y(m - 1);                 // dual objective b.y
    double psi = c.cwiseProduct(x).sum();  // primal objective

    SdpSolution sol;
    auto finish = [&](int iters) {
        MatrixXd x_cert = certify_primal(p, x);
        double lower = c.cwiseProduct(x_cert).sum();
        // If zeroing the constrained entries hurt the objective, polish with
        // a few alternating projections and keep the better point.
        const MatrixXd x_ref = certify_primal(p, refine_primal(p, x));
        const double lower_ref = c.cwiseProduct(x_ref).sum();
        if (lower_ref > lower) {
            lower = lower_ref;
            x_cert = x_ref;
        }
        VectorXd y_cert = y;
        MatrixXd z_cert = dual_slack_from(p, y_cert);
        const double guard = 64.0 * std::numeric_limits<double>::epsilon() * n *
                             std::max(1.0, z_cert.cwiseAbs().maxCoeff());
        const double zmin = min_eigenvalue(z_cert);
        if (zmin < guard) {
            y_cert(m - 1) += (guard - zmin);
            z_cert.diagonal().array() += (guard - zmin);
        }
        sol.lower = lower;
        sol.upper = y_cert(m - 1);
        sol.primal = x_cert;
        sol.dual_y = y_cert;
        sol.dual_slack = z_cert;
        sol.iterations = iters;
        sol.converged = (sol.upper - sol.lower) <= opts.tol;
    };

    const double gap_target = 0.05 * opts.tol;
    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        if (phi - psi <= gap_target * std::max(1.0, std::abs(phi))) {
            finish(iter);
            if (sol.converged) return sol;
        }

        Eigen::LLT<MatrixXd> llt(z);
        if (llt.info() != Eigen::Success) break;
        MatrixXd zi = llt.solve(MatrixXd::Identity(n, n));
        zi = ((zi + zi.transpose()) / 2.0).eval();
        const MatrixXd zix = zi * x;

        // Newton system M dy = mu*A(Z^{-1}) - b with M_kl = <A_k, Zi A_l X>.
        MatrixXd big_m(m, m);
        VectorXd rhs(m);
        for (std::size_t k = 0; k < m_pairs; ++k) {
            const auto [a, b] = p.zero_pairs[k];
            for (std::size_t l = 0; l <= k; ++l) {
                const auto [i, j] = p.zero_pairs[l];
                const double v = zi(a, i) * x(j, b) + zi(a, j) * x(i, b) +
                                 zi(b, i) * x(j, a) + zi(b, j) * x(i, a);
                big_m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = v;
                big_m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = v;
            }
            const double vtr = zix(a, b) + zix(b, a);
            big_m(static_cast<Eigen::Index>(k), m - 1) = vtr;
            big_m(m - 1, static_cast<Eigen::Index>(k)) = vtr;
            rhs(static_cast<Eigen::Index>(k)) = mu * 2.0 * zi(a, b);
        }
        big_m(m - 1, m - 1) = zix.trace();
        rhs(m - 1) = mu * zi.trace() - 1.0;

        VectorXd dy = big_m.ldlt().solve(rhs);
        if (!dy.allFinite()) dy = big_m.fullPivLu().solve(rhs);
        if (!dy.allFinite()) break;

        MatrixXd dz = MatrixXd::Zero(n, n);
        for (std::size_t k = 0; k < m_pairs; ++k) {
            const auto [a, b] = p.zero_pairs[k];
            dz(a, b) += dy(static_cast<Eigen::Index>(k));
            dz(b, a) += dy(static_cast<Eigen::Index>(k));
        }
        dz.diagonal().array() += dy(m - 1);

        MatrixXd dx = mu * zi - x - zi * dz * x;
        dx = ((dx + dx.transpose()) / 2.0).eval();

        const double alpha_p = psd_line_search(x, dx);
        const double alpha_d = psd_line_search(z, dz);
        if (alpha_p == 0.0 && alpha_d == 0.0) break;

        x += alpha_p * dx;
        y += alpha_d * dy;
        z += alpha_d * dz;
        mu = z.cwiseProduct(x).sum() / (2.0 * n);
        if (alpha_p + alpha_d > 1.8) mu *= 0.5;
        phi = y(m - 1);
        psi = c.cwiseProduct(x).sum();
        if (mu < 1e-300) break;
    }

    finish(iter);
    return sol;
}

ThetaResult lovasz_theta(const VertexWeightedGraph& g, const SdpOptions& opts) {
    const int n = g.order();
    if (n > opts.cap)
        throw CapError("theta solver capped at n <= " + std::to_string(opts.cap) + ", got " + std::to_string(n));
    if (n == 0) return {0.0, 0.0, MatrixXd(0, 0), 0, true};

    TraceSdp p;
    p.n = n;
    p.zero_pairs = g.edges();
    p.objective.resize(n, n);
    VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = std::sqrt(to_double(g.weight(i)));
    p.objective = s * s.transpose();

    const SdpSolution sol = solve_trace_sdp(p, opts);
    return {sol.lower, sol.upper, sol.primal, sol.iterations, sol.converged};
}

}  // namespace exg
