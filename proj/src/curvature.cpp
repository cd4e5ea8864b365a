#include "backbone/curvature.hpp"

#include <sstream>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/fmt.hpp"
#include "backbone/spectral.hpp"

namespace backbone {

double augmented_forman(const Graph& g, int u, int v, double gamma) {
    if (gamma <= 0.0) throw input_error("augmented_forman: gamma must be > 0");
    long long tri = edge_triangle_count(g, u, v); // validates that (u,v) is an edge
    return 4.0 - g.degree(u) - g.degree(v) + 3.0 * gamma * static_cast<double>(tri);
}

double link_resistance_curvature(const Graph& g, int i) {
    if (i < 0 || i >= g.num_nodes())
        throw input_error("link_resistance_curvature: node out of range");
    if (!is_connected(g))
        throw input_error("link_resistance_curvature: graph is disconnected");
    double total = 0.0;
    for (int j : g.neighbors(i)) total += pair_effective_resistance(g, i, j);
    return 1.0 - 0.5 * total;
}

CurvatureReport compute_curvature(const Graph& g, double gamma) {
    CurvatureReport report;
    report.gamma = gamma;
    EdgeSet edges = g.edge_list();
    report.forman.reserve(edges.size());
    for (auto [u, v] : edges) report.forman.push_back(augmented_forman(g, u, v, gamma));

    report.resistance_curvature.assign(g.num_nodes(), 0.0);
    // each edge resistance feeds both endpoint sums
    std::vector<double> omega = all_edge_resistances(g);
    for (size_t i = 0; i < edges.size(); ++i) {
        report.resistance_curvature[edges[i].first] -= 0.5 * omega[i];
        report.resistance_curvature[edges[i].second] -= 0.5 * omega[i];
    }
    for (double& rho : report.resistance_curvature) rho += 1.0;
    return report;
}

std::string curvature_table_tsv(const Graph& g, const CurvatureReport& report) {
    EdgeSet edges = g.edge_list();
    if (edges.size() != report.forman.size() ||
        static_cast<size_t>(g.num_nodes()) != report.resistance_curvature.size())
        throw input_error("curvature_table_tsv: report does not match graph");
    std::ostringstream out;
    for (size_t i = 0; i < edges.size(); ++i)
        out << edges[i].first << '\t' << edges[i].second << '\t'
            << format_value(report.forman[i]) << '\n';
    for (int i = 0; i < g.num_nodes(); ++i)
        out << i << '\t' << format_value(report.resistance_curvature[i]) << '\n';
    return out.str();
}

} // namespace backbone
