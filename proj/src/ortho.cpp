#include "exg/ortho.hpp"

#include <cmath>

#include "exg/errors.hpp"

namespace exg {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Unit vector orthogonal to the columns of basis (d x k); empty when the
// columns span R^d.
VectorXd null_space_vector(const MatrixXd& basis) {
    const Eigen::Index d = basis.rows();
    if (basis.cols() == 0) {
        VectorXd e = VectorXd::Zero(d);
        e(0) = 1.0;
        return e;
    }
    Eigen::JacobiSVD<MatrixXd> svd(basis, Eigen::ComputeFullU);
    const double cutoff = 1e-9 * std::max(1.0, svd.singularValues()(0));
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > cutoff) ++rank;
    }
    if (rank >= d) return VectorXd();
    return svd.matrixU().col(d - 1);  // least singular direction
}

}  // namespace

OrCheck verify_or(const VertexWeightedGraph& g, const OrthonormalRepresentation& rep, double tol) {
    const int n = g.order();
    if (rep.dim < 1 || static_cast<int>(rep.vectors.size()) != n || rep.handle.size() != rep.dim)
        throw InputError("representation shape does not match the graph");
    for (const auto& v : rep.vectors) {
        if (v.size() != rep.dim) throw InputError("vector dimension mismatch");
    }

    OrCheck check;
    const double handle_err = std::abs(rep.handle.norm() - 1.0);
    if (handle_err > tol) check.violations.push_back({-1, -1, handle_err});
    for (int i = 0; i < n; ++i) {
        const double err = std::abs(rep.vectors[static_cast<std::size_t>(i)].norm() - 1.0);
        if (err > tol) check.violations.push_back({i, i, err});
    }
    for (const auto& [i, j] : g.edges()) {
        const double ip = rep.vectors[static_cast<std::size_t>(i)].dot(rep.vectors[static_cast<std::size_t>(j)]);
        if (std::abs(ip) > tol) check.violations.push_back({i, j, ip});
    }
    check.valid = check.violations.empty();
    return check;
}

double or_value(const OrthonormalRepresentation& rep, const std::vector<double>& weights) {
    if (weights.size() != rep.vectors.size()) throw InputError("weight list does not match representation");
    double total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double proj = rep.handle.dot(rep.vectors[i]);
        total += weights[i] * proj * proj;
    }
    return total;
}

double or_value(const OrthonormalRepresentation& rep, const VertexWeightedGraph& g) {
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) w.push_back(to_double(g.weight(i)));
    return or_value(rep, w);
}

OrthonormalRepresentation umbrella_or(int n) {
    if (n < 5 || n % 2 == 0) throw InputError("umbrella construction needs odd n >= 5");
    const double pi = std::acos(-1.0);
    const double c2 = std::cos(pi / n) / (1.0 + std::cos(pi / n));
    const double c = std::sqrt(c2);
    const double s = std::sqrt(1.0 - c2);
    const int r = (n - 1) / 2;

    OrthonormalRepresentation rep;
    rep.dim = 3;
    rep.handle = Eigen::Vector3d(0, 0, 1);
    rep.vectors.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * pi * k * r / n;
        rep.vectors.emplace_back(Eigen::Vector3d(s * std::cos(angle), s * std::sin(angle), c));
    }
    return rep;
}

OrthonormalRepresentation or_from_theta_witness(const VertexWeightedGraph& g,
                                                const MatrixXd& psd_witness,
                                                double tol) {
    const int n = g.order();
    if (psd_witness.rows() != n || psd_witness.cols() != n)
        throw InputError("witness dimension does not match graph order");
    if (n == 0) throw InputError("empty graph has no representation to extract");

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(psd_witness);
    if (es.info() != Eigen::Success) throw ConvergenceError("eigendecomposition of the witness failed");
    const VectorXd& evals = es.eigenvalues();  // ascending
    const double lmax = std::max(evals(n - 1), 0.0);
    if (lmax <= 0) {
        throw ConvergenceError("witness is numerically zero; rank diagnostics: all eigenvalues <= 0");
    }
    const double cutoff = 1e-12 * lmax;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        if (evals(k) > cutoff) ++rank;
    }
    const int d = std::max(rank, 1);

    // Gram factor: X = B^T B with column b_i, so <b_i, b_j> = X_ij vanishes
    // on edges.
    MatrixXd b(d, n);
    for (int k = 0; k < d; ++k) {
        const int src = n - 1 - k;  // largest eigenvalues first
        b.row(k) = std::sqrt(std::max(evals(src), 0.0)) * es.eigenvectors().col(src).transpose();
    }

    // Handle: h = sum_i sqrt(w_i) b_i has |h|^2 = <W, X> = the SDP value.
    VectorXd h = VectorXd::Zero(d);
    for (int i = 0; i < n; ++i) h += std::sqrt(to_double(g.weight(i))) * b.col(i);
    if (h.norm() < 1e-12) {
        VectorXd e = VectorXd::Zero(d);
        e(0) = 1.0;
        h = e;
    }

    OrthonormalRepresentation rep;
    rep.dim = d;
    rep.handle = h / h.norm();
    rep.vectors.assign(static_cast<std::size_t>(n), VectorXd());

    const double degenerate_cutoff = 1e-7;
    std::vector<int> pending;
    for (int i = 0; i < n; ++i) {
        const double norm = b.col(i).norm();
        if (norm > degenerate_cutoff) {
            rep.vectors[static_cast<std::size_t>(i)] = b.col(i) / norm;
        } else {
            pending.push_back(i);
        }
    }

    // One local cleanup pass: remove the tiny edge residuals left by the
    // floating-point witness against already-fixed neighbours.
    for (int i = 0; i < n; ++i) {
        auto& vi = rep.vectors[static_cast<std::size_t>(i)];
        if (vi.size() == 0) continue;
        for (int j : g.neighbors(i).members()) {
            if (j >= i) continue;
            const auto& vj = rep.vectors[static_cast<std::size_t>(j)];
            if (vj.size() == 0) continue;
            vi -= vi.dot(vj) * vj;
        }
        const double norm = vi.norm();
        if (norm > degenerate_cutoff) {
            vi /= norm;
        } else {
            vi = VectorXd();
            pending.push_back(i);
        }
    }

    // Zero-projection vertices: any unit vector orthogonal to every assigned
    // neighbour, found in the null space or one fresh dimension.
    for (int i : pending) {
        std::vector<const VectorXd*> nb;
        for (int j : g.neighbors(i).members()) {
            const auto& vj = rep.vectors[static_cast<std::size_t>(j)];
            if (vj.size() > 0) nb.push_back(&vj);
        }
        MatrixXd basis(rep.dim, static_cast<Eigen::Index>(nb.size()));
        for (std::size_t k = 0; k < nb.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = *nb[k];
        VectorXd fill = null_space_vector(basis);
        if (fill.size() == 0) {
            // Neighbours span the space: extend every vector by one zero
            // coordinate and use the fresh axis.
            rep.dim += 1;
            auto extend = [&](VectorXd& v) {
                VectorXd w = VectorXd::Zero(rep.dim);
                w.head(rep.dim - 1) = v;
                v = w;
            };
            extend(rep.handle);
            for (auto& v : rep.vectors) {
                if (v.size() > 0) extend(v);
            }
            fill = VectorXd::Zero(rep.dim);
            fill(rep.dim - 1) = 1.0;
        }
        rep.vectors[static_cast<std::size_t>(i)] = fill;
        rep.degenerate.push_back(i);
    }
    (void)tol;
    return rep;
}

std::vector<double> quantum_assignment(const OrthonormalRepresentation& rep) {
    std::vector<double> p;
    p.reserve(rep.vectors.size());
    for (const auto& v : rep.vectors) {
        const double proj = rep.handle.dot(v);
        p.push_back(proj * proj);
    }
    return p;
}

}  // namespace exg
