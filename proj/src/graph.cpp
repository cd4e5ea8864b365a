#include "backbone/graph.hpp"

#include <algorithm>
#include <string>

#include "backbone/errors.hpp"

namespace backbone {

EdgeSet canonical_edges(std::vector<Edge> edges) {
    EdgeSet out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("from_edges: negative node count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("from_edges: endpoint (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range for n=" + std::to_string(n));
    }
    EdgeSet canon = canonical_edges(edges);

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(canon.size());
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : canon) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.nbrs_.resize(2 * canon.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : canon) {
        g.nbrs_[cursor[u]++] = v;
        g.nbrs_[cursor[v]++] = u;
    }
    // canonical edge order already emits each list in ascending order for v,
    // but u-entries of later edges interleave, so sort per node
    for (int i = 0; i < n; ++i)
        std::sort(g.nbrs_.begin() + g.offsets_[i], g.nbrs_.begin() + g.offsets_[i + 1]);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeSet Graph::edge_list() const {
    EdgeSet out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out; // already sorted: u ascending, v ascending within u
}

std::vector<double> adjacency_multiply(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.num_nodes())
        throw input_error("adjacency_multiply: vector length != node count");
    std::vector<double> y(x.size(), 0.0);
    for (int u = 0; u < g.num_nodes(); ++u) {
        double s = 0.0;
        for (int v : g.neighbors(u)) s += x[v];
        y[u] = s;
    }
    return y;
}

std::vector<double> laplacian_multiply(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.num_nodes())
        throw input_error("laplacian_multiply: vector length != node count");
    std::vector<double> y(x.size(), 0.0);
    for (int u = 0; u < g.num_nodes(); ++u) {
        double s = 0.0;
        for (int v : g.neighbors(u)) s += x[u] - x[v];
        y[u] = s;
    }
    return y;
}

namespace {

long long sorted_intersection_size(std::span<const int> a, std::span<const int> b) {
    long long count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

long long exact_triangle_count(const Graph& g) {
    // each triangle is counted once per edge, i.e. three times in total
    long long total = 0;
    for (int u = 0; u < g.num_nodes(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) total += sorted_intersection_size(g.neighbors(u), g.neighbors(v));
    return total / 3;
}

long long edge_triangle_count(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw input_error("edge_triangle_count: (" + std::to_string(u) + "," +
                          std::to_string(v) + ") is not an edge");
    return sorted_intersection_size(g.neighbors(u), g.neighbors(v));
}

long long wedge_count_ordered(const Graph& g) {
    long long total = 0;
    for (int u = 0; u < g.num_nodes(); ++u) {
        long long d = g.degree(u);
        total += d * (d - 1);
    }
    return total;
}

} // namespace backbone
