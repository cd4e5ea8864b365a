#pragma once

#include <vector>

#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

// Exactly uniform spanning tree via Wilson's loop-erased random walks; the
// root is drawn from rng each call. Disconnected input is an input_error
// (the walk would never terminate).
EdgeSet sample_spanning_tree(const Graph& g, Rng& rng);

// uniform `count`-subset without replacement; count > |edges| is an input_error
EdgeSet random_select(const EdgeSet& edges, long long count, Rng& rng);

// Empirical per-edge inclusion frequency over `trials` independent spanning
// trees, aligned with g.edge_list() order.
std::vector<double> edge_inclusion_frequency(const Graph& g, long long trials, Rng& rng);

} // namespace backbone
