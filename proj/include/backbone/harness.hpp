#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/sparsify.hpp"
#include "backbone/spectral.hpp"

namespace backbone {

enum class SweepWhat { metrics, clustering };

struct SweepOptions {
    std::vector<Method> methods = all_methods();
    // target average degrees; values above the graph's natural average degree
    // are clipped to it (with a comment in the output)
    std::vector<double> degrees = {1.1, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0};
    int num_seeds = 1;
    SweepWhat what = SweepWhat::metrics;
    bool auto_mode = true; // exact when n fits the dense cap, slq otherwise
    Mode mode = Mode::exact;
    SlqConfig slq;         // probes/steps for slq mode (seed is derived per cell)
    uint64_t seed = 42;    // master seed
    int jobs = 1;
};

struct SweepRow {
    std::string method;
    double degree = 0.0; // requested target degree; natural degree on "full" rows
    int seed = 0;        // repetition index
    std::string metric;
    double value = 0.0;
    std::string note;    // empty unless the cell was skipped/failed
};

struct SweepResult {
    std::vector<std::string> comments; // emitted as leading '#' lines
    std::vector<SweepRow> rows;
};

// The degree-sweep driver: for every (method, degree, repetition) sparsify and
// score — MetricsReport rows for `metrics`, Louvain-NMI-vs-labels rows for
// `clustering` — plus full-graph reference rows. Cells run on `jobs` workers;
// rows always come out in canonical enumeration order.
SweepResult degree_sweep(const Graph& g, const LabelVector* labels, const SweepOptions& opt);

// '#' comments, "method\tdegree\tseed\tmetric\tvalue" header, one row per
// line; failed rows carry the reason as a trailing extra column
std::string sweep_tsv(const SweepResult& result);

} // namespace backbone
