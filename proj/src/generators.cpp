#include "backbone/generators.hpp"

#include <string>

#include "backbone/errors.hpp"

namespace backbone {

Graph path_graph(int n) {
    if (n < 1) throw input_error("path_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph ring_graph(int n) {
    if (n < 3) throw input_error("ring_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw input_error("star_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph barbell_graph(int k) {
    if (k < 2) throw input_error("barbell_graph: k must be >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(k + i, k + j);
        }
    edges.emplace_back(k - 1, k); // the bridge
    return Graph::from_edges(2 * k, edges);
}

Graph karate_graph() {
    // Zachary (1977) karate club, 0-indexed
    static const int karate_edges[78][2] = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
        {0, 7}, {0, 8}, {0, 10}, {0, 11}, {0, 12}, {0, 13},
        {0, 17}, {0, 19}, {0, 21}, {0, 31}, {1, 2}, {1, 3},
        {1, 7}, {1, 13}, {1, 17}, {1, 19}, {1, 21}, {1, 30},
        {2, 3}, {2, 7}, {2, 8}, {2, 9}, {2, 13}, {2, 27},
        {2, 28}, {2, 32}, {3, 7}, {3, 12}, {3, 13}, {4, 6},
        {4, 10}, {5, 6}, {5, 10}, {5, 16}, {6, 16}, {8, 30},
        {8, 32}, {8, 33}, {9, 33}, {13, 33}, {14, 32}, {14, 33},
        {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32},
        {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
        {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31},
        {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
        {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33}};
    std::vector<Edge> edges;
    edges.reserve(78);
    for (const auto& e : karate_edges) edges.emplace_back(e[0], e[1]);
    return Graph::from_edges(34, edges);
}

Graph named_graph(const std::string& name) {
    if (name == "karate") return karate_graph();
    size_t colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon);
        int n;
        try {
            n = std::stoi(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw input_error("named_graph: bad size in \"" + name + "\"");
        }
        if (kind == "path") return path_graph(n);
        if (kind == "ring") return ring_graph(n);
        if (kind == "complete") return complete_graph(n);
        if (kind == "star") return star_graph(n);
        if (kind == "barbell") return barbell_graph(n);
    }
    throw input_error("named_graph: unknown graph \"" + name +
                      "\" (expected karate|path:N|ring:N|complete:N|star:N|barbell:K)");
}

std::pair<double, double> sbm_probabilities(const SbmSpec& spec) {
    if (spec.n < 1 || spec.k < 1) throw input_error("sbm: n and k must be >= 1");
    if (spec.k > spec.n) throw input_error("sbm: k > n");
    if (spec.snr < 1.0) throw input_error("sbm: snr must be >= 1");
    double nk = static_cast<double>(spec.n) / spec.k;
    // avg_degree = p_in*(n/k - 1) + p_out*n*(k-1)/k  with  p_in = snr*p_out
    double denom = spec.snr * (nk - 1.0) + static_cast<double>(spec.n) * (spec.k - 1) / spec.k;
    if (denom <= 0.0) throw input_error("sbm: degenerate parameters (k = n = 1?)");
    double p_out = spec.avg_degree / denom;
    double p_in = spec.snr * p_out;
    if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
        throw input_error("sbm: infeasible probabilities p_in=" + std::to_string(p_in) +
                          " p_out=" + std::to_string(p_out));
    return {p_in, p_out};
}

std::pair<Graph, LabelVector> generate_sbm(const SbmSpec& spec) {
    auto [p_in, p_out] = sbm_probabilities(spec);
    LabelVector labels(spec.n);
    for (int i = 0; i < spec.n; ++i) labels[i] = i % spec.k;

    Rng rng(spec.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(spec.avg_degree * spec.n / 2 * 1.1) + 16);
    for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) {
            double p = (labels[i] == labels[j]) ? p_in : p_out;
            if (rng.next_double() < p) edges.emplace_back(i, j);
        }
    }
    return {Graph::from_edges(spec.n, edges), std::move(labels)};
}

} // namespace backbone
