#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

// per-edge scores; covers every edge of the host graph exactly once
struct WeightedEdges {
    std::vector<std::tuple<int, int, double>> entries; // (u, v, weight), u < v, sorted
};

// Union of uniform spanning trees, truncated to the edge budget: fresh trees
// are merged whole while they fit, and the last one contributes a uniform
// sample of its not-yet-included edges. Connected input, n-1 <= m_bar <= m.
Graph ktree(const Graph& g, long long m_bar, Rng& rng);

// One uniform spanning tree plus a uniform sample of m_bar-n+1 non-tree edges.
Graph one_tree(const Graph& g, long long m_bar, Rng& rng);

// uniform m_bar-subset of the edges; may disconnect
Graph random_baseline(const Graph& g, long long m_bar, Rng& rng);

// weight(u,v) = 2 x_u x_v with x the unit principal adjacency eigenvector —
// the first-order change of the spectral radius if the edge is removed
WeightedEdges spectral_radius_weights(const Graph& g);

// weight(u,v) = 1 - d_u d_v / (2m): the edge's modularity contribution
WeightedEdges edge_significance_weights(const Graph& g);

enum class Keep { highest, lowest };

// Extremal spanning tree w.r.t. the keep direction (Kruskal), then the best
// remaining edges in keep order. Deterministic; ties broken by (u, v).
Graph weighted_backbone(const Graph& g, const WeightedEdges& weights, long long m_bar,
                        Keep keep);

enum class Method { ktree, one_tree, random, spectral_radius, edge_significance };

// "ktree", "1tree"/"one_tree", "random", "spectral_radius", "edge_significance"
Method method_from_string(const std::string& name);
std::string method_name(Method m);
std::vector<Method> all_methods();

// Dispatch with the default keep directions: spectral_radius keeps the
// lowest-weight edges (don't feed the radius), edge_significance the highest.
Graph sparsify(const Graph& g, Method method, long long m_bar, Rng& rng);

// round(d * n / 2), half away from zero
long long edges_for_avg_degree(double avg_degree, int n);

} // namespace backbone
