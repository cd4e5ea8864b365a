#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace backbone {

using Edge = std::pair<int, int>;

// Canonical edge container: (u, v) with u < v, sorted lexicographically, no
// duplicates. Produced by canonical_edges(); all module boundaries trade in
// this form so set algebra is plain merge logic.
using EdgeSet = std::vector<Edge>;

// Per-node integer class ids, contiguous from 0.
using LabelVector = std::vector<int>;

// normalize to (min,max) per edge, sort, drop duplicates and self-loops
EdgeSet canonical_edges(std::vector<Edge> edges);

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b);

// Immutable undirected simple graph in CSR form. Neighbor lists are sorted
// ascending; every edge appears in both endpoint lists; no self-loops.
class Graph {
public:
    Graph() = default;

    // Symmetrizes, drops self-loops, merges duplicates. Endpoint >= n or < 0
    // is an input_error.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int num_nodes() const { return n_; }
    long long num_edges() const { return m_; }

    int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }

    std::span<const int> neighbors(int u) const {
        return {nbrs_.data() + offsets_[u], nbrs_.data() + offsets_[u + 1]};
    }

    bool has_edge(int u, int v) const;

    // all edges as (u < v), sorted — the canonical order used everywhere
    EdgeSet edge_list() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> offsets_; // n+1
    std::vector<int> nbrs_;    // 2m, sorted per node
};

// y = A x and y = (D - A) x; length mismatch is an input_error
std::vector<double> adjacency_multiply(const Graph& g, const std::vector<double>& x);
std::vector<double> laplacian_multiply(const Graph& g, const std::vector<double>& x);

// exact triangle counts by sorted-list intersection
long long exact_triangle_count(const Graph& g);
long long edge_triangle_count(const Graph& g, int u, int v); // input_error if (u,v) not an edge

// ordered wedges = sum_i d_i (d_i - 1); global_cc denominator
long long wedge_count_ordered(const Graph& g);

} // namespace backbone
