#include "backbone/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

#include "backbone/errors.hpp"

namespace backbone {

Partition singleton_partition(int n) {
    Partition p;
    p.assignment.resize(n);
    for (int i = 0; i < n; ++i) p.assignment[i] = i;
    p.num_clusters = n;
    return p;
}

Partition partition_from_labels(const LabelVector& labels) {
    // Compact arbitrary label values to contiguous ids, smallest label first,
    // matching the label-file loader's convention.
    std::map<int, int> compact;
    for (int lab : labels) compact.emplace(lab, 0);
    int next = 0;
    for (auto& [lab, id] : compact) id = next++;
    Partition p;
    p.assignment.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) p.assignment[i] = compact[labels[i]];
    p.num_clusters = next;
    return p;
}

double modularity(const Graph& g, const Partition& p) {
    if (g.num_edges() < 1) throw input_error("modularity: graph has no edges");
    if (static_cast<int>(p.assignment.size()) != g.num_nodes())
        throw input_error("modularity: partition size mismatch");
    double m = static_cast<double>(g.num_edges());
    std::vector<double> intra(p.num_clusters, 0.0), deg(p.num_clusters, 0.0);
    for (auto [u, v] : g.edge_list())
        if (p.assignment[u] == p.assignment[v]) intra[p.assignment[u]] += 1.0;
    for (int u = 0; u < g.num_nodes(); ++u) deg[p.assignment[u]] += g.degree(u);
    double q = 0.0;
    for (int c = 0; c < p.num_clusters; ++c) {
        double frac = deg[c] / (2.0 * m);
        q += intra[c] / m - frac * frac;
    }
    return q;
}

namespace {

// One aggregation level: weighted adjacency with self-loop weights stored
// doubled, so strength[i] = sum of row i and sum(strength) = 2W at any level.
struct Level {
    std::vector<std::vector<std::pair<int, double>>> adj; // off-diagonal entries
    std::vector<double> self;                             // doubled self-loop weight
    std::vector<double> strength;
    double two_w = 0.0;
};

double level_modularity(const Level& lv, const std::vector<int>& comm, int num_comm) {
    std::vector<double> in(num_comm, 0.0), tot(num_comm, 0.0);
    int n = static_cast<int>(lv.adj.size());
    for (int u = 0; u < n; ++u) {
        tot[comm[u]] += lv.strength[u];
        in[comm[u]] += lv.self[u];
        for (auto [v, w] : lv.adj[u])
            if (comm[v] == comm[u]) in[comm[u]] += w; // both directions visited
    }
    double q = 0.0;
    for (int c = 0; c < num_comm; ++c) {
        double frac = tot[c] / lv.two_w;
        q += in[c] / lv.two_w - frac * frac;
    }
    return q;
}

// local-move passes; returns true if any node changed community
bool local_moves(const Level& lv, std::vector<int>& comm, Rng& rng) {
    int n = static_cast<int>(lv.adj.size());
    std::vector<double> sigma_tot(n, 0.0);
    for (int u = 0; u < n; ++u) sigma_tot[comm[u]] += lv.strength[u];

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int u : order) {
            int c0 = comm[u];
            // weights from u into each adjacent community (sorted for determinism)
            std::map<int, double> w_to;
            w_to[c0] = 0.0;
            for (auto [v, w] : lv.adj[u]) w_to[comm[v]] += w;

            sigma_tot[c0] -= lv.strength[u];
            double base = w_to[c0] - lv.strength[u] * sigma_tot[c0] / lv.two_w;
            int best = c0;
            double best_gain = base;
            for (auto [c, w] : w_to) {
                if (c == c0) continue;
                double gain = w - lv.strength[u] * sigma_tot[c] / lv.two_w;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            sigma_tot[best] += lv.strength[u];
            if (best != c0) {
                comm[u] = best;
                improved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

} // namespace

Partition louvain(const Graph& g, Rng& rng) {
    if (g.num_edges() < 1) throw input_error("louvain: graph has no edges");
    int n = g.num_nodes();

    Level lv;
    lv.adj.resize(n);
    lv.self.assign(n, 0.0);
    for (auto [u, v] : g.edge_list()) {
        lv.adj[u].emplace_back(v, 1.0);
        lv.adj[v].emplace_back(u, 1.0);
    }
    lv.strength.assign(n, 0.0);
    for (int u = 0; u < n; ++u)
        for (auto [v, w] : lv.adj[u]) lv.strength[u] += w;
    lv.two_w = 2.0 * static_cast<double>(g.num_edges());

    std::vector<int> node_to_orig_comm(n); // assignment on the original nodes
    for (int i = 0; i < n; ++i) node_to_orig_comm[i] = i;

    for (;;) {
        int ln = static_cast<int>(lv.adj.size());
        std::vector<int> comm(ln);
        for (int i = 0; i < ln; ++i) comm[i] = i;

        double q_before = level_modularity(lv, comm, ln);
        bool moved = local_moves(lv, comm, rng);

        // compress community ids (order of first appearance)
        std::vector<int> remap(ln, -1);
        int num_comm = 0;
        for (int i = 0; i < ln; ++i)
            if (remap[comm[i]] == -1) remap[comm[i]] = num_comm++;
        for (int i = 0; i < ln; ++i) comm[i] = remap[comm[i]];

        double q_after = level_modularity(lv, comm, num_comm);
        assert(q_after >= q_before - 1e-9); // moves never lose modularity
        (void)q_before;
        (void)q_after;

        for (int i = 0; i < n; ++i) node_to_orig_comm[i] = comm[node_to_orig_comm[i]];
        if (!moved || num_comm == ln) break;

        // aggregate: communities become nodes
        Level next;
        next.adj.resize(num_comm);
        next.self.assign(num_comm, 0.0);
        std::vector<std::map<int, double>> agg(num_comm);
        for (int u = 0; u < ln; ++u) {
            next.self[comm[u]] += lv.self[u];
            for (auto [v, w] : lv.adj[u]) {
                if (comm[v] == comm[u]) next.self[comm[u]] += w; // both directions sum to 2w
                else agg[comm[u]][comm[v]] += w;
            }
        }
        for (int c = 0; c < num_comm; ++c)
            for (auto [d, w] : agg[c]) next.adj[c].emplace_back(d, w);
        next.strength.assign(num_comm, 0.0);
        for (int c = 0; c < num_comm; ++c) {
            next.strength[c] = next.self[c];
            for (auto [d, w] : next.adj[c]) next.strength[c] += w;
        }
        next.two_w = lv.two_w;
        lv = std::move(next);
    }

    // final contiguous relabel in order of first appearance on original nodes
    std::map<int, int> final_map;
    Partition p;
    p.assignment.resize(n);
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = final_map.emplace(node_to_orig_comm[i],
                                                static_cast<int>(final_map.size()));
        p.assignment[i] = it->second;
    }
    p.num_clusters = static_cast<int>(final_map.size());
    return p;
}

double nmi(const LabelVector& a, const LabelVector& b) {
    if (a.size() != b.size()) throw input_error("nmi: label vectors differ in length");
    if (a.empty()) return 1.0;
    double n = static_cast<double>(a.size());

    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> pa, pb;
    for (size_t i = 0; i < a.size(); ++i) {
        joint[{a[i], b[i]}] += 1.0;
        pa[a[i]] += 1.0;
        pb[b[i]] += 1.0;
    }
    double ha = 0.0, hb = 0.0, mi = 0.0;
    for (auto& [k, c] : pa) {
        double p = c / n;
        ha -= p * std::log(p);
    }
    for (auto& [k, c] : pb) {
        double p = c / n;
        hb -= p * std::log(p);
    }
    for (auto& [k, c] : joint) {
        double p = c / n;
        mi += p * std::log(p * n * n / (pa[k.first] * pb[k.second]));
    }
    if (ha <= 0.0 && hb <= 0.0) return 1.0; // both constant: identical up to relabel
    if (ha <= 0.0 || hb <= 0.0) return 0.0;
    double v = mi / std::sqrt(ha * hb);
    return std::min(1.0, std::max(0.0, v));
}

std::pair<std::vector<int>, std::vector<int>> train_test_split(const LabelVector& labels,
                                                               int per_class, Rng& rng) {
    if (per_class < 0) throw input_error("train_test_split: negative per_class");
    std::map<int, std::vector<int>> members;
    for (size_t i = 0; i < labels.size(); ++i)
        members[labels[i]].push_back(static_cast<int>(i));
    std::vector<int> train, test;
    for (auto& [cls, nodes] : members) {
        if (static_cast<int>(nodes.size()) < per_class)
            throw input_error("train_test_split: class " + std::to_string(cls) + " has " +
                              std::to_string(nodes.size()) + " < " +
                              std::to_string(per_class) + " members");
        rng.shuffle(nodes);
        for (size_t i = 0; i < nodes.size(); ++i)
            (static_cast<int>(i) < per_class ? train : test).push_back(nodes[i]);
    }
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    return {train, test};
}

} // namespace backbone
