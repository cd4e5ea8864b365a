#include "backbone/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "backbone/errors.hpp"

namespace backbone {

namespace {

void fail_line(const std::string& path, int line_no, const std::string& what) {
    throw input_error(path + ":" + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open edge list: " + path);

    std::vector<Edge> edges;
    long long max_id = -1;
    long long n_override = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            // honor an optional "# nodes=N" header
            size_t pos = line.find("nodes=");
            if (pos != std::string::npos) {
                try {
                    n_override = std::stoll(line.substr(pos + 6));
                } catch (const std::exception&) {
                    fail_line(path, line_no, "bad nodes= header");
                }
            }
            continue;
        }
        std::istringstream ss(line);
        long long u, v;
        if (!(ss >> u >> v)) fail_line(path, line_no, "expected \"u v\"");
        std::string rest;
        if (ss >> rest) fail_line(path, line_no, "trailing tokens after \"u v\"");
        if (u < 0 || v < 0) fail_line(path, line_no, "negative node id");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long n = max_id + 1;
    if (n_override >= 0) {
        if (n_override < n)
            throw input_error(path + ": nodes= header smaller than max node id + 1");
        n = n_override;
    }
    if (n > (1ll << 30)) throw input_error(path + ": node count implausibly large");
    return Graph::from_edges(static_cast<int>(n), edges);
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write edge list: " + path);
    // header keeps isolated trailing nodes across a round trip
    out << "# nodes=" << g.num_nodes() << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
    if (!out) throw input_error("write failed: " + path);
}

LabelVector load_labels(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open label file: " + path);
    std::vector<long long> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        try {
            raw.push_back(std::stoll(line));
        } catch (const std::exception&) {
            fail_line(path, line_no, "expected one integer label");
        }
    }
    if (static_cast<int>(raw.size()) != expected_n)
        throw input_error(path + ": " + std::to_string(raw.size()) + " labels for " +
                          std::to_string(expected_n) + " nodes");
    // remap to contiguous ids, ordered by raw label value
    std::map<long long, int> ids;
    for (long long r : raw) ids.emplace(r, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    LabelVector labels(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) labels[i] = ids[raw[i]];
    return labels;
}

void save_labels(const LabelVector& labels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write label file: " + path);
    for (int l : labels) out << l << "\n";
    if (!out) throw input_error("write failed: " + path);
}

std::string to_dot(const Graph& g, const EdgeSet& highlight) {
    for (auto [u, v] : highlight)
        if (!g.has_edge(u, v))
            throw input_error("highlight edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") is not in the graph");
    std::ostringstream out;
    out << "graph g {\n";
    for (int i = 0; i < g.num_nodes(); ++i) out << "  " << i << ";\n";
    for (auto [u, v] : g.edge_list()) {
        out << "  " << u << " -- " << v;
        if (std::binary_search(highlight.begin(), highlight.end(), Edge{u, v}))
            out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace backbone
