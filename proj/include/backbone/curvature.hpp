#pragma once

#include <string>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

// combinatorial edge curvature 4 - d_u - d_v + 3*gamma*(triangles on the edge)
double augmented_forman(const Graph& g, int u, int v, double gamma = 1.0);

// node curvature rho_i = 1 - (1/2) * sum of effective resistances to neighbors
double link_resistance_curvature(const Graph& g, int i);

struct CurvatureReport {
    double gamma = 1.0;
    std::vector<double> forman;               // aligned with g.edge_list()
    std::vector<double> resistance_curvature; // per node
};

CurvatureReport compute_curvature(const Graph& g, double gamma = 1.0);

// edge rows "u v F#" then node rows "i rho"
std::string curvature_table_tsv(const Graph& g, const CurvatureReport& report);

} // namespace backbone
