#include "backbone/tree.hpp"

#include <algorithm>
#include <map>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"

namespace backbone {

EdgeSet sample_spanning_tree(const Graph& g, Rng& rng) {
    int n = g.num_nodes();
    if (n < 1) throw input_error("sample_spanning_tree: empty graph");
    if (!is_connected(g)) throw input_error("sample_spanning_tree: graph is disconnected");

    // Wilson: walk from each unvisited node until the growing tree is hit;
    // next[] keeps only the latest exit from each node, which erases loops
    // implicitly (a revisit overwrites the stale pointer).
    std::vector<bool> in_tree(n, false);
    std::vector<int> next(n, -1);
    int root = rng.bounded_int(n);
    in_tree[root] = true;

    for (int start = 0; start < n; ++start) {
        if (in_tree[start]) continue;
        int u = start;
        while (!in_tree[u]) {
            auto nb = g.neighbors(u);
            next[u] = nb[rng.bounded_int(static_cast<int>(nb.size()))];
            u = next[u];
        }
        // commit the loop-erased path
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = true;
            u = next[u];
        }
    }

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        if (v != root) edges.emplace_back(v, next[v]);
    return canonical_edges(std::move(edges));
}

EdgeSet random_select(const EdgeSet& edges, long long count, Rng& rng) {
    if (count < 0 || count > static_cast<long long>(edges.size()))
        throw input_error("random_select: count " + std::to_string(count) +
                          " out of range for " + std::to_string(edges.size()) + " edges");
    // partial Fisher-Yates: the first `count` slots end up a uniform subset
    EdgeSet pool = edges;
    for (long long i = 0; i < count; ++i) {
        long long j = i + static_cast<long long>(rng.bounded(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<double> edge_inclusion_frequency(const Graph& g, long long trials, Rng& rng) {
    if (trials < 1) throw input_error("edge_inclusion_frequency: trials must be >= 1");
    EdgeSet all = g.edge_list();
    std::map<Edge, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

    std::vector<long long> hits(all.size(), 0);
    for (long long t = 0; t < trials; ++t) {
        EdgeSet tree = sample_spanning_tree(g, rng);
        for (const Edge& e : tree) ++hits[index.at(e)];
    }
    std::vector<double> freq(all.size());
    for (size_t i = 0; i < all.size(); ++i)
        freq[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
    return freq;
}

} // namespace backbone
