#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/linalg.hpp"

namespace backbone {

// exact | estimators (Lanczos quadrature for traces, Lanczos/CG for eigenpairs)
enum class Mode { exact, slq };

struct SlqConfig {
    int num_probes = 100;
    int lanczos_steps = 10;
    uint64_t seed = 0;
};

inline constexpr int kDenseCap = 2000;

struct DenseSpectrum {
    std::vector<double> laplacian; // ascending
    std::vector<double> adjacency; // ascending
};

// Full symmetric eigendecompositions of L and A. n over the cap is an
// input_error — that path is the oracle, not the production estimator.
DenseSpectrum dense_spectrum(const Graph& g, int cap = kDenseCap);

// largest adjacency eigenvalue (Lanczos); m >= 1 required
double spectral_radius(const Graph& g);

// unit Perron vector of A on a connected graph, sign-fixed to nonnegative sum
std::vector<double> adjacency_principal_vector(const Graph& g);

// second-smallest Laplacian eigenvalue; returns 0 for disconnected input
double algebraic_connectivity(const Graph& g);

// largest Laplacian eigenvalue (Lanczos)
double laplacian_max_eigenvalue(const Graph& g);

// omega(u,v) = (e_u - e_v)^T L^+ (e_u - e_v), by projected CG
double pair_effective_resistance(const Graph& g, int u, int v);

// omega for every edge, aligned with g.edge_list(); one pseudoinverse for
// small graphs, per-edge CG above the dense cap
std::vector<double> all_edge_resistances(const Graph& g);

// dense Moore-Penrose pseudoinverse of the Laplacian, row-major n*n (oracle path)
std::vector<double> dense_laplacian_pinv(const Graph& g, int cap = kDenseCap);

// R = n * sum_{i>=2} 1/lambda_i; connected input required
double total_effective_resistance(const Graph& g, Mode mode, const SlqConfig& cfg = {});

// log of the spanning-tree product sum_{i>=2} log lambda_i (matrix-tree count
// times n); connected input required
double log_num_spanning_trees(const Graph& g, Mode mode, const SlqConfig& cfg = {});

// tr(A^3)/6; exact mode counts wedges, slq mode estimates the cubic trace
double triangle_count(const Graph& g, Mode mode, const SlqConfig& cfg = {});

// 3*triangles / wedges; 0 when the graph has no wedge
double global_clustering_coefficient(const Graph& g);

// mean over nodes of c_i; degree < 2 contributes 0
double avg_local_clustering(const Graph& g);

enum class SpectralFn { identity, inverse, log, cube };

// Hutchinson + Lanczos quadrature estimate of tr(f(M)). For inverse/log on
// the Laplacian the probes are deflated against the constant vector and the
// graph must be connected.
double slq_trace(const Graph& g, MatrixKind kind, SpectralFn fn, const SlqConfig& cfg);

struct MetricsReport {
    double algebraic_connectivity = 0.0;
    double spectral_radius = 0.0;
    double effective_resistance = 0.0;
    double log_num_trees = 0.0;
    double num_triangles = 0.0;
    double global_cc = 0.0;
    double avg_local_cc = 0.0;
    double finite_condition_number = 0.0;
};

// All eight metrics in one pass. Disconnected input yields lambda_2 = 0 and
// infinities where the metric is undefined; counting metrics still computed.
MetricsReport compute_metrics(const Graph& g, Mode mode, const SlqConfig& cfg = {});

// fixed field order, matching the struct
std::vector<std::string> metric_names();
std::vector<double> metric_values(const MetricsReport& r);

std::string metrics_tsv_header();                  // single wide row form
std::string metrics_tsv_row(const MetricsReport&);

} // namespace backbone
