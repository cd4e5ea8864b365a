#include "backbone/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "backbone/errors.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void remove_mean(std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

std::vector<double> apply(const Graph& g, MatrixKind kind, const std::vector<double>& x) {
    return kind == MatrixKind::adjacency ? adjacency_multiply(g, x) : laplacian_multiply(g, x);
}

} // namespace

CgResult solve_laplacian(const Graph& g, std::vector<double> b, double sigma,
                         double rel_tol, int max_iter) {
    int n = g.num_nodes();
    CgResult res;
    res.x.assign(n, 0.0);
    remove_mean(b);
    double b_norm = norm(b);
    if (b_norm == 0.0) {
        res.converged = true;
        return res;
    }

    std::vector<double> r = b;
    std::vector<double> p = r;
    double rr = dot(r, r);
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> ap = laplacian_multiply(g, p);
        if (sigma != 0.0)
            for (int i = 0; i < n; ++i) ap[i] -= sigma * p[i];
        remove_mean(ap); // keep everything in the subspace; exact-arithmetic no-op
        double pap = dot(p, ap);
        if (pap <= 0.0) {
            res.indefinite = true;
            res.iterations = it;
            return res;
        }
        double alpha = rr / pap;
        for (int i = 0; i < n; ++i) {
            res.x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        double rr_new = dot(r, r);
        res.iterations = it + 1;
        if (std::sqrt(rr_new) <= rel_tol * b_norm) {
            res.converged = true;
            remove_mean(res.x);
            return res;
        }
        double beta = rr_new / rr;
        rr = rr_new;
        for (int i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    remove_mean(res.x);
    return res;
}

LanczosResult lanczos_extreme(const Graph& g, MatrixKind kind, const LanczosOptions& opt) {
    int n = g.num_nodes();
    LanczosResult out;
    if (n == 0) throw input_error("lanczos_extreme: empty graph");
    if (n == 1) { // 1x1 matrix is (0) for both kinds
        out.value = 0.0;
        out.vec = {1.0};
        out.converged = true;
        return out;
    }

    Rng rng(opt.seed);
    int max_steps = std::min(opt.max_steps, opt.deflate_constant ? n - 1 : n);

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    std::vector<double> v(n);
    for (double& x : v) x = rng.next_double() - 0.5;
    if (opt.deflate_constant) remove_mean(v);
    double nv = norm(v);
    if (nv == 0.0) throw numerical_error("lanczos_extreme: degenerate start vector");
    for (double& x : v) x /= nv;
    basis.push_back(v);

    auto ritz_extreme = [&](TridiagEig& te, int& idx) {
        te = tridiag_eigh(alpha, beta);
        idx = opt.largest ? static_cast<int>(te.values.size()) - 1 : 0;
    };

    double spread = 1.0;
    for (int j = 0; j < max_steps; ++j) {
        std::vector<double> w = apply(g, kind, basis[j]);
        if (opt.deflate_constant) remove_mean(w);
        double a = dot(basis[j], w);
        alpha.push_back(a);
        for (int i = 0; i < n; ++i) w[i] -= a * basis[j][i];
        if (j > 0)
            for (int i = 0; i < n; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
        // Full reorthogonalization, two classical Gram-Schmidt sweeps. The
        // deflated constant vector is part of the basis being swept: without
        // it the rounding-level mean reintroduced by the recurrence gets
        // amplified by every 1/beta normalization and the smallest Ritz value
        // slides to the Laplacian nullspace.
        for (int pass = 0; pass < 2; ++pass) {
            if (opt.deflate_constant) remove_mean(w);
            for (const auto& u : basis) {
                double c = dot(u, w);
                for (int i = 0; i < n; ++i) w[i] -= c * u[i];
            }
        }
        if (opt.deflate_constant) remove_mean(w);

        double b = norm(w);
        int k = static_cast<int>(alpha.size());
        TridiagEig te;
        int idx;
        ritz_extreme(te, idx);
        spread = std::max(1e-30, te.values.back() - te.values.front());
        if (k >= 2) spread = std::max(spread, std::abs(te.values[idx]));
        double s_last = te.vectors[static_cast<size_t>(idx) * k + (k - 1)];
        out.value = te.values[idx];
        out.residual = std::abs(b * s_last);
        out.steps = k;

        // Breakdown must be judged against the matrix scale, not the Ritz
        // spread: with a (near-)degenerate spectrum the spread is ~0 after one
        // step while a machine-epsilon beta already means an exact invariant
        // subspace. Normalizing that noise vector would resurrect deflated
        // directions.
        double mat_scale = 1e-30;
        for (double x : alpha) mat_scale = std::max(mat_scale, std::abs(x));
        for (double x : beta) mat_scale = std::max(mat_scale, std::abs(x));
        bool breakdown = b <= 1e-13 * std::max(mat_scale, spread);
        double conv_scale = std::max(spread, std::abs(out.value));
        if (out.residual <= opt.rel_tol * conv_scale || breakdown || k == max_steps) {
            out.converged = out.residual <= opt.rel_tol * conv_scale || breakdown;
            out.vec.assign(n, 0.0);
            for (int col = 0; col < k; ++col) {
                double s = te.vectors[static_cast<size_t>(idx) * k + col];
                for (int i = 0; i < n; ++i) out.vec[i] += s * basis[col][i];
            }
            if (opt.deflate_constant) remove_mean(out.vec);
            double nrm = norm(out.vec);
            if (nrm > 0)
                for (double& x : out.vec) x /= nrm;
            return out;
        }
        beta.push_back(b);
        for (double& x : w) x /= b;
        basis.push_back(std::move(w));
    }
    return out; // unreachable
}

} // namespace backbone
