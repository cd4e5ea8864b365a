// The only translation unit that touches Eigen: dense symmetric
// eigendecompositions for the oracle path and the small tridiagonal solves
// inside Lanczos/SLQ.
#include <Eigen/Dense>

#include "backbone/errors.hpp"
#include "backbone/linalg.hpp"
#include "backbone/spectral.hpp"

namespace backbone {

DenseSpectrum dense_spectrum(const Graph& g, int cap) {
    int n = g.num_nodes();
    if (n > cap)
        throw input_error("dense_spectrum: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    Eigen::MatrixXd lap = -a;
    for (int u = 0; u < n; ++u) lap(u, u) = static_cast<double>(g.degree(u));

    DenseSpectrum out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.compute(lap, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numerical_error("dense_spectrum: laplacian solve failed");
    out.laplacian.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    es.compute(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numerical_error("dense_spectrum: adjacency solve failed");
    out.adjacency.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

std::vector<double> dense_laplacian_pinv(const Graph& g, int cap) {
    int n = g.num_nodes();
    if (n > cap)
        throw input_error("dense_laplacian_pinv: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) lap(u, v) = -1.0;
        lap(u, u) = static_cast<double>(g.degree(u));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    if (es.info() != Eigen::Success)
        throw numerical_error("dense_laplacian_pinv: eigensolve failed");
    double lam_max = n > 0 ? std::max(1.0, es.eigenvalues()(n - 1)) : 1.0;
    double tol = 1e-12 * lam_max;
    Eigen::VectorXd inv = es.eigenvalues().unaryExpr(
        [tol](double l) { return l > tol ? 1.0 / l : 0.0; });
    Eigen::MatrixXd pinv =
        es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    std::vector<double> out(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i) * n + j] = pinv(i, j);
    return out;
}

TridiagEig tridiag_eigh(const std::vector<double>& alpha, const std::vector<double>& beta) {
    int k = static_cast<int>(alpha.size());
    if (k == 0) throw input_error("tridiag_eigh: empty matrix");
    if (static_cast<int>(beta.size()) != k - 1)
        throw input_error("tridiag_eigh: off-diagonal length mismatch");
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < k; ++i) {
        t(i, i + 1) = beta[i];
        t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    if (es.info() != Eigen::Success) throw numerical_error("tridiag_eigh: solve failed");
    TridiagEig out;
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
    out.vectors.assign(es.eigenvectors().data(),
                       es.eigenvectors().data() + static_cast<size_t>(k) * k);
    return out;
}

} // namespace backbone
