#include "backbone/sparsify.hpp"

#include <algorithm>
#include <cmath>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/spectral.hpp"
#include "backbone/tree.hpp"

namespace backbone {

namespace {

void check_budget(const Graph& g, long long m_bar, bool needs_tree) {
    long long lo = needs_tree ? g.num_nodes() - 1 : 0;
    if (m_bar < lo || m_bar > g.num_edges())
        throw budget_error("edge budget " + std::to_string(m_bar) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(g.num_edges()) + "]");
}

void check_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw input_error(std::string(who) + ": input graph is disconnected");
}

} // namespace

Graph ktree(const Graph& g, long long m_bar, Rng& rng) {
    check_connected(g, "ktree");
    check_budget(g, m_bar, true);
    long long n = g.num_nodes();

    EdgeSet kept;
    while (static_cast<long long>(kept.size()) < m_bar) {
        EdgeSet tree = sample_spanning_tree(g, rng);
        if (static_cast<long long>(kept.size()) <= m_bar - (n - 1)) {
            // a whole tree still fits (it overlaps kept, so this is conservative)
            kept = edge_union(kept, tree);
        } else {
            EdgeSet fresh = edge_difference(tree, kept);
            long long want = m_bar - static_cast<long long>(kept.size());
            long long take = std::min(want, static_cast<long long>(fresh.size()));
            kept = edge_union(kept, random_select(fresh, take, rng));
        }
    }
    return Graph::from_edges(g.num_nodes(), kept);
}

Graph one_tree(const Graph& g, long long m_bar, Rng& rng) {
    check_connected(g, "one_tree");
    check_budget(g, m_bar, true);
    EdgeSet tree = sample_spanning_tree(g, rng);
    EdgeSet rest = edge_difference(g.edge_list(), tree);
    EdgeSet extra = random_select(rest, m_bar - (g.num_nodes() - 1), rng);
    return Graph::from_edges(g.num_nodes(), edge_union(tree, extra));
}

Graph random_baseline(const Graph& g, long long m_bar, Rng& rng) {
    check_budget(g, m_bar, false);
    return Graph::from_edges(g.num_nodes(), random_select(g.edge_list(), m_bar, rng));
}

WeightedEdges spectral_radius_weights(const Graph& g) {
    check_connected(g, "spectral_radius_weights");
    std::vector<double> x = adjacency_principal_vector(g);
    WeightedEdges w;
    for (auto [u, v] : g.edge_list()) w.entries.emplace_back(u, v, 2.0 * x[u] * x[v]);
    return w;
}

WeightedEdges edge_significance_weights(const Graph& g) {
    if (g.num_edges() < 1) throw input_error("edge_significance_weights: graph has no edges");
    double two_m = 2.0 * static_cast<double>(g.num_edges());
    WeightedEdges w;
    for (auto [u, v] : g.edge_list())
        w.entries.emplace_back(u, v, 1.0 - g.degree(u) * g.degree(v) / two_m);
    return w;
}

Graph weighted_backbone(const Graph& g, const WeightedEdges& weights, long long m_bar,
                        Keep keep) {
    check_connected(g, "weighted_backbone");
    check_budget(g, m_bar, true);
    if (weights.entries.size() != static_cast<size_t>(g.num_edges()))
        throw input_error("weighted_backbone: weights do not cover the edge set");

    // order all edges by preference; ties fall back to canonical edge order
    std::vector<size_t> order(weights.entries.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        double wa = std::get<2>(weights.entries[a]);
        double wb = std::get<2>(weights.entries[b]);
        if (wa != wb) return keep == Keep::highest ? wa > wb : wa < wb;
        return weights.entries[a] < weights.entries[b];
    });

    // Kruskal pass: the extremal spanning tree in preference order
    DisjointSets dsu(g.num_nodes());
    EdgeSet kept;
    std::vector<size_t> skipped;
    for (size_t idx : order) {
        auto [u, v, w] = weights.entries[idx];
        if (!g.has_edge(u, v))
            throw input_error("weighted_backbone: weight entry is not a graph edge");
        if (dsu.unite(u, v)) kept.emplace_back(u, v);
        else skipped.push_back(idx);
    }
    if (static_cast<long long>(kept.size()) != g.num_nodes() - 1)
        throw input_error("weighted_backbone: input graph is disconnected");

    // then the best of the rest, same order
    long long want = m_bar - (g.num_nodes() - 1);
    for (size_t i = 0; i < skipped.size() && want > 0; ++i, --want) {
        auto [u, v, w] = weights.entries[skipped[i]];
        kept.emplace_back(u, v);
    }
    return Graph::from_edges(g.num_nodes(), kept);
}

Method method_from_string(const std::string& name) {
    if (name == "ktree") return Method::ktree;
    if (name == "1tree" || name == "one_tree") return Method::one_tree;
    if (name == "random") return Method::random;
    if (name == "spectral_radius") return Method::spectral_radius;
    if (name == "edge_significance") return Method::edge_significance;
    throw input_error("unknown method \"" + name +
                      "\" (ktree|1tree|random|spectral_radius|edge_significance)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ktree: return "ktree";
        case Method::one_tree: return "1tree";
        case Method::random: return "random";
        case Method::spectral_radius: return "spectral_radius";
        case Method::edge_significance: return "edge_significance";
    }
    return "?";
}

std::vector<Method> all_methods() {
    return {Method::ktree, Method::one_tree, Method::random, Method::spectral_radius,
            Method::edge_significance};
}

Graph sparsify(const Graph& g, Method method, long long m_bar, Rng& rng) {
    switch (method) {
        case Method::ktree: return ktree(g, m_bar, rng);
        case Method::one_tree: return one_tree(g, m_bar, rng);
        case Method::random: return random_baseline(g, m_bar, rng);
        case Method::spectral_radius:
            return weighted_backbone(g, spectral_radius_weights(g), m_bar, Keep::lowest);
        case Method::edge_significance:
            return weighted_backbone(g, edge_significance_weights(g), m_bar, Keep::highest);
    }
    throw input_error("sparsify: bad method");
}

long long edges_for_avg_degree(double avg_degree, int n) {
    return std::llround(avg_degree * n / 2.0);
}

} // namespace backbone
