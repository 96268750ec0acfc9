#include "gait/umap/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace gait::umap {

namespace {

/// Rayleigh–Ritz extraction of the top eigenpairs of a symmetric operator
/// via subspace iteration. `op` must be symmetric positive (shifted).
Eigen::MatrixXd top_eigenvectors(const Eigen::MatrixXd& op, std::size_t count, Rng& rng) {
    const std::size_t n = static_cast<std::size_t>(op.rows());
    Eigen::MatrixXd q(n, count);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < count; ++c) q(i, c) = rng.normal();
    }
    q = Eigen::HouseholderQR<Eigen::MatrixXd>(q).householderQ() *
        Eigen::MatrixXd::Identity(n, count);

    Eigen::VectorXd prev_ritz = Eigen::VectorXd::Zero(count);
    for (int iter = 0; iter < 300; ++iter) {
        Eigen::MatrixXd y = op * q;
        q = Eigen::HouseholderQR<Eigen::MatrixXd>(y).householderQ() *
            Eigen::MatrixXd::Identity(n, count);
        if (iter % 10 == 9) {
            Eigen::MatrixXd small = q.transpose() * op * q;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(small);
            Eigen::VectorXd ritz = es.eigenvalues();
            if ((ritz - prev_ritz).cwiseAbs().maxCoeff() < 1e-10) break;
            prev_ritz = ritz;
        }
    }

    Eigen::MatrixXd small = q.transpose() * op * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(small);
    // Eigen sorts ascending; flip to descending eigenvalue order.
    Eigen::MatrixXd vectors = q * es.eigenvectors();
    return vectors.rowwise().reverse();
}

} // namespace

bool spectral_init(const FuzzyGraph& graph, std::size_t dim, Rng& rng, Matrix& z) {
    const std::size_t n = graph.n_vertices;
    if (n < dim + 2) return false;

    // Degree-normalized adjacency S = D^{-1/2} W D^{-1/2}, shifted by +I so
    // subspace iteration targets its largest eigenvalues.
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
    for (const auto& e : graph.edges) {
        degree[static_cast<Eigen::Index>(e.i)] += e.weight;
        degree[static_cast<Eigen::Index>(e.j)] += e.weight;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (degree[static_cast<Eigen::Index>(i)] <= 0.0)
            degree[static_cast<Eigen::Index>(i)] = 1.0;
    }
    for (const auto& e : graph.edges) {
        const auto i = static_cast<Eigen::Index>(e.i);
        const auto j = static_cast<Eigen::Index>(e.j);
        const double w = e.weight / std::sqrt(degree[i] * degree[j]);
        s(i, j) = w;
        s(j, i) = w;
    }
    s.diagonal().array() += 1.0;

    const std::size_t block = dim + 1;
    Eigen::MatrixXd vectors;
    if (n <= 64) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
        if (es.info() != Eigen::Success) return false;
        vectors = es.eigenvectors().rowwise().reverse().leftCols(
            static_cast<Eigen::Index>(block));
    } else {
        vectors = top_eigenvectors(s, block, rng);
    }

    // Drop the trivial top eigenvector; the next `dim` carry the layout.
    Matrix coords(n, dim);
    double max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double v = vectors(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(c + 1));
            if (!std::isfinite(v)) return false;
            coords(i, c) = v;
            max_abs = std::max(max_abs, std::fabs(v));
        }
    }
    if (max_abs <= 0.0) return false;

    // Expand to the optimizer's working scale and break exact ties.
    const double scale = 10.0 / max_abs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c) {
            coords(i, c) = coords(i, c) * scale + rng.normal(0.0, 1e-4);
        }
    }
    z = std::move(coords);
    return true;
}

Matrix random_init(std::size_t n, std::size_t dim, Rng& rng) {
    Matrix z(n, dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < dim; ++c) z(i, c) = rng.uniform(-10.0, 10.0);
    }
    return z;
}

} // namespace gait::umap
