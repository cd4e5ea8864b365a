#pragma once

#include <utility>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/rng.hpp"

namespace backbone {

struct Partition {
    std::vector<int> assignment; // node -> cluster id, contiguous from 0
    int num_clusters = 0;
};

Partition singleton_partition(int n);
Partition partition_from_labels(const LabelVector& labels);

// Q = sum_c (e_c/m - (d_c/2m)^2); m >= 1 required
double modularity(const Graph& g, const Partition& p);

// Greedy modularity optimization: shuffled local moves until no gain, then
// aggregation, repeated until a level makes no move. Resolution fixed at 1.
Partition louvain(const Graph& g, Rng& rng);

// I(A;B) / sqrt(H(A) H(B)) with natural logs; both entropies zero -> 1,
// exactly one zero -> 0
double nmi(const LabelVector& a, const LabelVector& b);

// `per_class` uniformly chosen nodes per class for training, rest for test;
// both sorted; class smaller than per_class is an input_error
std::pair<std::vector<int>, std::vector<int>> train_test_split(const LabelVector& labels,
                                                               int per_class, Rng& rng);

} // namespace backbone
