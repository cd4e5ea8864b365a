#include "backbone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/fmt.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

double spectral_radius(const Graph& g) {
    if (g.num_edges() < 1) throw input_error("spectral_radius: graph has no edges");
    LanczosOptions opt;
    opt.largest = true;
    opt.rel_tol = 1e-12;
    LanczosResult r = lanczos_extreme(g, MatrixKind::adjacency, opt);
    if (!r.converged) throw numerical_error("spectral_radius: Lanczos did not converge");
    return r.value;
}

std::vector<double> adjacency_principal_vector(const Graph& g) {
    if (!is_connected(g)) throw input_error("adjacency_principal_vector: graph is disconnected");
    if (g.num_edges() < 1) throw input_error("adjacency_principal_vector: graph has no edges");
    LanczosOptions opt;
    opt.largest = true;
    opt.rel_tol = 1e-12;
    LanczosResult r = lanczos_extreme(g, MatrixKind::adjacency, opt);
    if (!r.converged) throw numerical_error("adjacency_principal_vector: Lanczos did not converge");
    double sum = 0.0;
    for (double x : r.vec) sum += x;
    if (sum < 0)
        for (double& x : r.vec) x = -x;
    return r.vec;
}

double laplacian_max_eigenvalue(const Graph& g) {
    if (g.num_edges() < 1) return 0.0;
    LanczosOptions opt;
    opt.largest = true;
    opt.rel_tol = 1e-12;
    LanczosResult r = lanczos_extreme(g, MatrixKind::laplacian, opt);
    if (!r.converged) throw numerical_error("laplacian_max_eigenvalue: Lanczos did not converge");
    return r.value;
}

double algebraic_connectivity(const Graph& g) {
    int n = g.num_nodes();
    if (n <= 1) return 0.0;
    if (!is_connected(g)) return 0.0;
    if (n == 2) return 2.0; // connected pair: L = [[1,-1],[-1,1]]

    LanczosOptions opt;
    opt.largest = false;
    opt.deflate_constant = true;
    opt.rel_tol = 1e-12;
    LanczosResult r = lanczos_extreme(g, MatrixKind::laplacian, opt);

    double lam_max = laplacian_max_eigenvalue(g);
    double scale = std::max(lam_max, 1e-30);
    if (r.converged && r.residual <= 1e-9 * scale) return r.value;

    // Clustered small eigenvalues can stall plain Lanczos; polish with
    // safeguarded shift-inverted iteration started from the Ritz vector.
    std::vector<double> x = r.vec;
    double theta = r.value;
    double resid = r.residual;
    double sigma = std::max(0.0, 0.9 * (theta - resid));
    for (int round = 0; round < 40; ++round) {
        CgResult cg = solve_laplacian(g, x, sigma, 1e-12, 50 * n + 1000);
        if (cg.indefinite) { // sigma crossed above lambda_2: back off
            sigma *= 0.5;
            if (sigma < 1e-14 * scale) sigma = 0.0;
            continue;
        }
        double nrm = 0.0;
        for (double v : cg.x) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) break;
        for (size_t i = 0; i < x.size(); ++i) x[i] = cg.x[i] / nrm;
        std::vector<double> lx = laplacian_multiply(g, x);
        theta = 0.0;
        for (size_t i = 0; i < x.size(); ++i) theta += x[i] * lx[i];
        double rn = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            double d = lx[i] - theta * x[i];
            rn += d * d;
        }
        resid = std::sqrt(rn);
        if (resid <= 1e-10 * scale) return theta;
        // Rayleigh-quotient shift, kept strictly below the current estimate
        sigma = std::max(0.0, theta - std::max(resid, 1e-3 * theta));
    }
    if (resid <= 1e-6 * scale) return theta; // good enough for the 1e-6 contract
    throw numerical_error("algebraic_connectivity: eigensolver did not converge");
}

double pair_effective_resistance(const Graph& g, int u, int v) {
    int n = g.num_nodes();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw input_error("pair_effective_resistance: node out of range");
    if (u == v) return 0.0;
    if (!is_connected(g))
        throw input_error("pair_effective_resistance: graph is disconnected");
    std::vector<double> b(n, 0.0);
    b[u] = 1.0;
    b[v] = -1.0;
    CgResult cg = solve_laplacian(g, b, 0.0, 1e-11, 200 * n + 2000);
    if (!cg.converged)
        throw numerical_error("pair_effective_resistance: CG did not converge");
    return cg.x[u] - cg.x[v];
}

std::vector<double> all_edge_resistances(const Graph& g) {
    if (!is_connected(g))
        throw input_error("all_edge_resistances: graph is disconnected");
    EdgeSet edges = g.edge_list();
    std::vector<double> out;
    out.reserve(edges.size());
    int n = g.num_nodes();
    if (n <= kDenseCap) {
        std::vector<double> pinv = dense_laplacian_pinv(g);
        for (auto [u, v] : edges) {
            size_t uu = static_cast<size_t>(u) * n + u;
            size_t vv = static_cast<size_t>(v) * n + v;
            size_t uv = static_cast<size_t>(u) * n + v;
            out.push_back(pinv[uu] + pinv[vv] - 2.0 * pinv[uv]);
        }
    } else {
        for (auto [u, v] : edges) out.push_back(pair_effective_resistance(g, u, v));
    }
    return out;
}

namespace {

// sum over nonzero Laplacian eigenvalues of f, from the dense oracle
template <typename F>
double dense_nonzero_sum(const Graph& g, F f) {
    DenseSpectrum ds = dense_spectrum(g);
    double total = 0.0;
    for (size_t i = 1; i < ds.laplacian.size(); ++i) total += f(ds.laplacian[i]);
    return total;
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw input_error(std::string(who) + ": graph is disconnected");
}

} // namespace

double total_effective_resistance(const Graph& g, Mode mode, const SlqConfig& cfg) {
    require_connected(g, "total_effective_resistance");
    if (g.num_nodes() <= 1) return 0.0;
    if (mode == Mode::exact)
        return g.num_nodes() * dense_nonzero_sum(g, [](double l) { return 1.0 / l; });
    return g.num_nodes() * slq_trace(g, MatrixKind::laplacian, SpectralFn::inverse, cfg);
}

double log_num_spanning_trees(const Graph& g, Mode mode, const SlqConfig& cfg) {
    require_connected(g, "log_num_spanning_trees");
    if (g.num_nodes() <= 1) return 0.0;
    if (mode == Mode::exact)
        return dense_nonzero_sum(g, [](double l) { return std::log(l); });
    return slq_trace(g, MatrixKind::laplacian, SpectralFn::log, cfg);
}

double triangle_count(const Graph& g, Mode mode, const SlqConfig& cfg) {
    if (mode == Mode::exact) return static_cast<double>(exact_triangle_count(g));
    return slq_trace(g, MatrixKind::adjacency, SpectralFn::cube, cfg) / 6.0;
}

double global_clustering_coefficient(const Graph& g) {
    long long wedges = wedge_count_ordered(g);
    if (wedges == 0) return 0.0;
    return 6.0 * static_cast<double>(exact_triangle_count(g)) / static_cast<double>(wedges);
}

double avg_local_clustering(const Graph& g) {
    int n = g.num_nodes();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (int u = 0; u < n; ++u) {
        long long d = g.degree(u);
        if (d < 2) continue;
        long long closed = 0; // ordered closed wedges at u = 2 * triangles at u
        for (int v : g.neighbors(u)) closed += edge_triangle_count(g, u, v);
        total += static_cast<double>(closed) / static_cast<double>(d * (d - 1));
    }
    return total / static_cast<double>(n);
}

double slq_trace(const Graph& g, MatrixKind kind, SpectralFn fn, const SlqConfig& cfg) {
    if (cfg.num_probes < 1 || cfg.lanczos_steps < 1)
        throw input_error("slq_trace: probes and steps must be >= 1");
    int n = g.num_nodes();
    if (n == 0) return 0.0;
    bool deflate = kind == MatrixKind::laplacian &&
                   (fn == SpectralFn::inverse || fn == SpectralFn::log);
    if (deflate) require_connected(g, "slq_trace");
    if (deflate && n == 1) return 0.0;

    auto f = [fn](double x) {
        switch (fn) {
            case SpectralFn::identity: return x;
            case SpectralFn::inverse: return 1.0 / x;
            case SpectralFn::log: return std::log(x);
            case SpectralFn::cube: return x * x * x;
        }
        return 0.0;
    };

    Rng base(cfg.seed);
    double sum = 0.0;
    for (int probe = 0; probe < cfg.num_probes; ++probe) {
        Rng rng = base.split(static_cast<uint64_t>(probe));
        double estimate = 0.0;
        bool ok = false;
        for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
            // Rademacher probe, deflated for nullspace-sensitive functions
            std::vector<double> z(n);
            for (double& x : z) x = (rng.next_u64() & 1u) ? 1.0 : -1.0;
            if (deflate) {
                double mean = 0.0;
                for (double x : z) mean += x;
                mean /= n;
                for (double& x : z) x -= mean;
            }
            double zz = 0.0;
            for (double x : z) zz += x * x;
            if (zz == 0.0) continue; // all-equal probe after deflation; redraw

            // Lanczos expansion of the probe (full reorthogonalization:
            // the basis is tiny, so keeping it clean is nearly free)
            std::vector<std::vector<double>> basis;
            std::vector<double> alpha, beta;
            std::vector<double> v = z;
            double nv = std::sqrt(zz);
            for (double& x : v) x /= nv;
            basis.push_back(v);
            int steps = std::min(cfg.lanczos_steps, deflate ? n - 1 : n);
            for (int j = 0; j < steps; ++j) {
                std::vector<double> w = kind == MatrixKind::adjacency
                                            ? adjacency_multiply(g, basis[j])
                                            : laplacian_multiply(g, basis[j]);
                if (deflate) {
                    double mean = 0.0;
                    for (double x : w) mean += x;
                    mean /= n;
                    for (double& x : w) x -= mean;
                }
                double a = 0.0;
                for (int i = 0; i < n; ++i) a += basis[j][i] * w[i];
                alpha.push_back(a);
                if (j + 1 == steps) break;
                for (int i = 0; i < n; ++i) w[i] -= a * basis[j][i];
                if (j > 0)
                    for (int i = 0; i < n; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
                for (const auto& u : basis) {
                    double c = 0.0;
                    for (int i = 0; i < n; ++i) c += u[i] * w[i];
                    for (int i = 0; i < n; ++i) w[i] -= c * u[i];
                }
                double b = 0.0;
                for (double x : w) b += x * x;
                b = std::sqrt(b);
                if (b <= 1e-12) break; // invariant subspace: quadrature is exact
                beta.push_back(b);
                for (double& x : w) x /= b;
                basis.push_back(std::move(w));
            }

            TridiagEig te = tridiag_eigh(alpha, beta);
            int k = static_cast<int>(alpha.size());
            double acc = 0.0;
            bool bad = false;
            for (int j = 0; j < k; ++j) {
                double theta = te.values[j];
                if ((fn == SpectralFn::inverse || fn == SpectralFn::log) && theta <= 1e-12) {
                    bad = true; // quadrature node collapsed onto the nullspace
                    break;
                }
                double tau = te.vectors[static_cast<size_t>(j) * k]; // first row entry
                acc += tau * tau * f(theta);
            }
            if (bad || std::isnan(acc)) continue;
            estimate = zz * acc;
            ok = true;
        }
        if (!ok) throw numerical_error("slq_trace: persistent Lanczos breakdown");
        sum += estimate; // accumulate in probe-index order
    }
    return sum / static_cast<double>(cfg.num_probes);
}

MetricsReport compute_metrics(const Graph& g, Mode mode, const SlqConfig& cfg) {
    MetricsReport r;
    bool connected = is_connected(g);
    int n = g.num_nodes();

    r.num_triangles = triangle_count(g, mode, cfg);
    r.global_cc = global_clustering_coefficient(g);
    r.avg_local_cc = avg_local_clustering(g);

    if (mode == Mode::exact) {
        DenseSpectrum ds = dense_spectrum(g);
        r.spectral_radius = n > 0 ? ds.adjacency.back() : 0.0;
        if (connected && n > 1) {
            r.algebraic_connectivity = ds.laplacian[1];
            double inv = 0.0, lg = 0.0;
            for (int i = 1; i < n; ++i) {
                inv += 1.0 / ds.laplacian[i];
                lg += std::log(ds.laplacian[i]);
            }
            r.effective_resistance = n * inv;
            r.log_num_trees = lg;
            r.finite_condition_number = ds.laplacian.back() / ds.laplacian[1];
        }
    } else {
        r.spectral_radius = g.num_edges() > 0 ? spectral_radius(g) : 0.0;
        if (connected && n > 1) {
            r.algebraic_connectivity = algebraic_connectivity(g);
            r.effective_resistance = total_effective_resistance(g, Mode::slq, cfg);
            r.log_num_trees = log_num_spanning_trees(g, Mode::slq, cfg);
            r.finite_condition_number =
                laplacian_max_eigenvalue(g) / r.algebraic_connectivity;
        }
    }
    if (!connected) {
        r.algebraic_connectivity = 0.0;
        r.effective_resistance = kInf;
        r.log_num_trees = -kInf;
        r.finite_condition_number = kInf;
    } else if (n <= 1) {
        // single node: one (empty) spanning tree, nothing to resist
        r.algebraic_connectivity = 0.0;
        r.effective_resistance = 0.0;
        r.log_num_trees = 0.0;
        r.finite_condition_number = kInf;
    }
    return r;
}

std::vector<std::string> metric_names() {
    return {"algebraic_connectivity", "spectral_radius",  "effective_resistance",
            "log_num_trees",          "num_triangles",    "global_cc",
            "avg_local_cc",           "finite_condition_number"};
}

std::vector<double> metric_values(const MetricsReport& r) {
    return {r.algebraic_connectivity, r.spectral_radius, r.effective_resistance,
            r.log_num_trees,          r.num_triangles,   r.global_cc,
            r.avg_local_cc,           r.finite_condition_number};
}

std::string metrics_tsv_header() {
    std::string out;
    auto names = metric_names();
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += '\t';
        out += names[i];
    }
    return out;
}

std::string metrics_tsv_row(const MetricsReport& r) {
    std::string out;
    auto vals = metric_values(r);
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out += '\t';
        out += format_value(vals[i]);
    }
    return out;
}

} // namespace backbone
