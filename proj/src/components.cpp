#include "backbone/components.hpp"

#include <algorithm>

namespace backbone {

std::vector<int> connected_components(const Graph& g) {
    int n = g.num_nodes();
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    int next_id = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next_id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = next_id;
                    stack.push_back(v);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.num_nodes() <= 1) return true;
    auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

ComponentResult largest_component(const Graph& g) {
    auto comp = connected_components(g);
    int num_comps = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    if (num_comps <= 1) {
        ComponentResult r;
        r.graph = g;
        r.old_id.resize(g.num_nodes());
        for (int i = 0; i < g.num_nodes(); ++i) r.old_id[i] = i;
        return r;
    }
    std::vector<int> size(num_comps, 0);
    for (int c : comp) ++size[c];
    // max_element takes the first maximum, and component ids are assigned in
    // order of smallest member, so ties go to the component with the smallest node
    int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());

    ComponentResult r;
    std::vector<int> new_id(g.num_nodes(), -1);
    for (int i = 0; i < g.num_nodes(); ++i) {
        if (comp[i] == best) {
            new_id[i] = static_cast<int>(r.old_id.size());
            r.old_id.push_back(i);
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edge_list())
        if (comp[u] == best && comp[v] == best)
            edges.emplace_back(new_id[u], new_id[v]);
    r.graph = Graph::from_edges(static_cast<int>(r.old_id.size()), edges);
    return r;
}

} // namespace backbone
