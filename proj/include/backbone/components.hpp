#pragma once

#include <utility>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

// component id per node, ids contiguous from 0 in order of first appearance
std::vector<int> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Largest connected component (ties broken by smallest contained node id),
// plus the mapping old_id[new] = original node id.
struct ComponentResult {
    Graph graph;
    std::vector<int> old_id;
};
ComponentResult largest_component(const Graph& g);

// Union-find over n elements; used by Kruskal, acyclicity checks, components.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // returns false if already joined
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

} // namespace backbone
