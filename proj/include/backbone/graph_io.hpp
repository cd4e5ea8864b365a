#pragma once

#include <string>

#include "backbone/graph.hpp"

namespace backbone {

// Text format: whitespace-separated "u v" per line; '#' starts a comment line.
// n defaults to 1 + max node id; a "# nodes=N" comment overrides it.
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

// one integer per line; line k = label of node k; remapped to contiguous ids
LabelVector load_labels(const std::string& path, int expected_n);
void save_labels(const LabelVector& labels, const std::string& path);

// DOT output for external rendering; highlight edges are drawn bold.
// highlight must be a subset of g's edges (input_error otherwise).
std::string to_dot(const Graph& g, const EdgeSet& highlight = {});

} // namespace backbone
