#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

Graph path_graph(int n);
Graph ring_graph(int n);     // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);     // node 0 is the center, n-1 leaves
Graph barbell_graph(int k);  // two K_k joined by one bridge edge, k >= 2
Graph karate_graph();        // Zachary's karate club, 34 nodes / 78 edges

// Parse "karate", "path:N", "ring:N", "complete:N", "star:N", "barbell:K".
// Unknown name is an input_error.
Graph named_graph(const std::string& name);

struct SbmSpec {
    int n = 1000;
    int k = 10;          // number of planted communities
    double snr = 5.0;    // p_in / p_out
    double avg_degree = 100.0;
    uint64_t seed = 0;
};

// Planted-partition model: labels round-robin (node i -> i mod k, sizes within
// one of each other), intra-pair probability p_in = snr * p_out, with p_out
// solved from  avg_degree = p_in*(n/k - 1) + p_out*n*(k-1)/k.
// Infeasible probabilities (outside [0,1]) -> input_error.
std::pair<Graph, LabelVector> generate_sbm(const SbmSpec& spec);

// the probabilities the generator would use, exposed for tests/CLI messages
std::pair<double, double> sbm_probabilities(const SbmSpec& spec);

} // namespace backbone
