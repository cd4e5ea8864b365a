#pragma once

#include <cstdint>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

enum class MatrixKind { adjacency, laplacian };

// --- conjugate gradient on the Laplacian, restricted to the complement of
// the constant vector (the Laplacian nullspace on connected graphs) ---

struct CgResult {
    std::vector<double> x;
    bool converged = false;
    bool indefinite = false; // (L - sigma I) was not PD on the subspace; caller must lower sigma
    int iterations = 0;
};

// Solves (L - sigma*I) x = b with b and all iterates projected against 1.
// rel_tol is on ||r|| / ||b||.
CgResult solve_laplacian(const Graph& g, std::vector<double> b, double sigma,
                         double rel_tol, int max_iter);

// --- Lanczos with full reorthogonalization for extreme eigenpairs ---

struct LanczosOptions {
    bool largest = true;           // largest algebraic eigenvalue; false -> smallest
    bool deflate_constant = false; // work orthogonally to the all-ones vector
    int max_steps = 600;
    double rel_tol = 1e-10;        // on the Ritz residual |beta * s_k| / spread
    uint64_t seed = 0x6c616e637aull; // start-vector seed; fixed so results are reproducible
};

struct LanczosResult {
    double value = 0.0;
    std::vector<double> vec; // Ritz vector
    double residual = 0.0;   // absolute Ritz residual estimate
    bool converged = false;
    int steps = 0;
};

LanczosResult lanczos_extreme(const Graph& g, MatrixKind kind, const LanczosOptions& opt);

// --- small dense solvers (Eigen-backed, see src/dense.cpp) ---

struct TridiagEig {
    std::vector<double> values;  // ascending, size k
    std::vector<double> vectors; // column-major k*k; column j is the j-th eigenvector
};

// symmetric tridiagonal eigendecomposition; alpha: diagonal (k), beta: off-diagonal (k-1)
TridiagEig tridiag_eigh(const std::vector<double>& alpha, const std::vector<double>& beta);

} // namespace backbone
