// Command-line front end: sparsify | metrics | gen-sbm | sweep | export-dot.
// Every command is a pure function of its inputs and --seed, so repeated runs
// produce byte-identical files.
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "backbone/clustering.hpp"
#include "backbone/components.hpp"
#include "backbone/curvature.hpp"
#include "backbone/errors.hpp"
#include "backbone/fmt.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/harness.hpp"
#include "backbone/sparsify.hpp"
#include "backbone/spectral.hpp"

namespace {

using namespace backbone;

// --input accepts a file path or a built-in name (karate, path:N, ...)
Graph load_input(const std::string& input) {
    if (std::ifstream probe(input); probe.good()) return load_edge_list(input);
    try {
        return named_graph(input);
    } catch (const input_error&) {
        throw input_error("cannot open \"" + input +
                          "\" as a file or a built-in graph name");
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
    if (!out) throw input_error("write failed: " + path);
}

long long resolve_budget(const Graph& g, double avg_degree, long long edges,
                         bool have_degree) {
    return have_degree ? edges_for_avg_degree(avg_degree, g.num_nodes()) : edges;
}

int run(int argc, char** argv) {
    CLI::App app{"sparse connected backbones of graphs, and the numbers to judge them by"};
    app.require_subcommand(1);

    uint64_t seed = 42;
    int jobs = 1;
    app.add_option("--seed", seed, "random seed (default 42)")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();

    // --- sparsify ---
    auto* sp = app.add_subcommand("sparsify", "extract a sparse backbone");
    std::string sp_input, sp_method, sp_output;
    double sp_degree = 0.0;
    long long sp_edges = 0;
    sp->add_option("--input", sp_input, "edge list file or built-in graph name")->required();
    sp->add_option("--method", sp_method,
                   "ktree|1tree|random|spectral_radius|edge_significance")
        ->required();
    auto* sp_deg_opt = sp->add_option("--avg-degree", sp_degree,
                                      "target average degree (edges = round(d*n/2))");
    auto* sp_edges_opt = sp->add_option("--edges", sp_edges, "target edge count");
    sp_deg_opt->excludes(sp_edges_opt);
    sp_edges_opt->excludes(sp_deg_opt);
    sp->add_option("--output", sp_output, "output edge list path")->required();

    // --- metrics ---
    auto* mt = app.add_subcommand("metrics", "score a graph");
    std::string mt_input, mt_output, mt_mode = "exact", mt_curv_out, mt_json_out;
    int mt_probes = 100, mt_steps = 10;
    double mt_gamma = 1.0;
    mt->add_option("--input", mt_input, "edge list file or built-in graph name")->required();
    mt->add_option("--mode", mt_mode, "exact|slq")->check(CLI::IsMember({"exact", "slq"}));
    mt->add_option("--probes", mt_probes, "slq probe vectors")->capture_default_str();
    mt->add_option("--steps", mt_steps, "slq Lanczos steps")->capture_default_str();
    mt->add_option("--gamma", mt_gamma, "curvature gamma")->capture_default_str();
    mt->add_option("--output", mt_output, "metric TSV path")->required();
    mt->add_option("--curvature-table", mt_curv_out, "also write the per-edge/per-node curvature TSV");
    mt->add_option("--json", mt_json_out, "also write the report as JSON");

    // --- gen-sbm ---
    auto* gs = app.add_subcommand("gen-sbm", "generate a planted-partition graph");
    int gs_n = 1000, gs_k = 10;
    double gs_snr = 5.0, gs_degree = 100.0;
    std::string gs_output;
    gs->add_option("--n", gs_n, "nodes")->capture_default_str();
    gs->add_option("--k", gs_k, "communities")->capture_default_str();
    gs->add_option("--snr", gs_snr, "p_in / p_out")->capture_default_str();
    gs->add_option("--avg-degree", gs_degree, "expected average degree")->capture_default_str();
    gs->add_option("--output", gs_output, "output prefix (writes .edges and .labels)")
        ->required();

    // --- sweep ---
    auto* sw = app.add_subcommand("sweep", "degree sweep over methods");
    std::string sw_input, sw_labels, sw_output, sw_what = "metrics", sw_mode = "auto";
    std::vector<std::string> sw_methods;
    std::vector<double> sw_degrees;
    int sw_seeds = 1, sw_probes = 100, sw_steps = 10;
    sw->add_option("--input", sw_input, "edge list file or built-in graph name")->required();
    sw->add_option("--labels", sw_labels, "label file (required for --what clustering)");
    sw->add_option("--methods", sw_methods, "comma-separated method list")
        ->delimiter(',')
        ->required();
    sw->add_option("--degrees", sw_degrees, "comma-separated target average degrees")
        ->delimiter(',');
    sw->add_option("--seeds", sw_seeds, "repetitions per cell")->capture_default_str();
    sw->add_option("--what", sw_what, "metrics|clustering")
        ->check(CLI::IsMember({"metrics", "clustering"}));
    sw->add_option("--mode", sw_mode, "auto|exact|slq")
        ->check(CLI::IsMember({"auto", "exact", "slq"}));
    sw->add_option("--probes", sw_probes, "slq probe vectors")->capture_default_str();
    sw->add_option("--steps", sw_steps, "slq Lanczos steps")->capture_default_str();
    sw->add_option("--output", sw_output, "sweep TSV path")->required();

    // --- export-dot ---
    auto* ed = app.add_subcommand("export-dot", "DOT file, optionally with a bold backbone");
    std::string ed_input, ed_highlight, ed_output;
    ed->add_option("--input", ed_input, "edge list file or built-in graph name")->required();
    ed->add_option("--highlight", ed_highlight, "edge list of backbone edges to draw bold");
    ed->add_option("--output", ed_output, "DOT output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints the message / help text
        return rc == 0 ? 0 : 2;
    }

    if (sp->parsed()) {
        if (sp_deg_opt->count() == 0 && sp_edges_opt->count() == 0)
            throw input_error("sparsify: exactly one of --avg-degree / --edges is required");
        Graph g = load_input(sp_input);
        Method method = method_from_string(sp_method);
        long long m_bar = resolve_budget(g, sp_degree, sp_edges, sp_deg_opt->count() > 0);
        Rng rng(seed);
        Graph backbone = sparsify(g, method, m_bar, rng);
        save_edge_list(backbone, sp_output);
        std::cout << "method=" << method_name(method) << " edges=" << backbone.num_edges()
                  << " connected=" << (is_connected(backbone) ? "true" : "false") << "\n";
        return 0;
    }

    if (mt->parsed()) {
        Graph g = load_input(mt_input);
        Mode mode = mt_mode == "slq" ? Mode::slq : Mode::exact;
        SlqConfig cfg{mt_probes, mt_steps, seed};
        bool connected = is_connected(g);
        MetricsReport report = compute_metrics(g, mode, cfg);

        std::ostringstream out;
        out << "metric\tvalue\n";
        out << "connected\t" << (connected ? 1 : 0) << "\n";
        auto names = metric_names();
        auto values = metric_values(report);
        for (size_t i = 0; i < names.size(); ++i)
            out << names[i] << '\t' << format_value(values[i]) << '\n';

        double mean_forman = std::numeric_limits<double>::quiet_NaN();
        double mean_rho = std::numeric_limits<double>::quiet_NaN();
        if (g.num_edges() > 0) {
            CurvatureReport curv;
            if (connected) {
                curv = compute_curvature(g, mt_gamma);
                double s = 0.0;
                for (double rho : curv.resistance_curvature) s += rho;
                mean_rho = s / g.num_nodes();
            } else {
                // Forman is purely combinatorial; resistance curvature needs
                // a connected graph
                curv.gamma = mt_gamma;
                for (auto [u, v] : g.edge_list())
                    curv.forman.push_back(augmented_forman(g, u, v, mt_gamma));
            }
            double s = 0.0;
            for (double f : curv.forman) s += f;
            mean_forman = s / static_cast<double>(g.num_edges());
            if (!mt_curv_out.empty()) {
                if (!connected)
                    throw input_error("curvature table needs a connected graph");
                write_file(mt_curv_out, curvature_table_tsv(g, curv));
            }
        } else if (!mt_curv_out.empty()) {
            throw input_error("curvature table needs at least one edge");
        }
        out << "mean_forman\t" << format_value(mean_forman) << '\n';
        out << "mean_resistance_curvature\t" << format_value(mean_rho) << '\n';
        write_file(mt_output, out.str());

        if (!mt_json_out.empty()) {
            nlohmann::ordered_json j;
            j["connected"] = connected;
            for (size_t i = 0; i < names.size(); ++i)
                j[names[i]] = values[i];
            j["mean_forman"] = mean_forman;
            j["mean_resistance_curvature"] = mean_rho;
            write_file(mt_json_out, j.dump(2) + "\n");
        }
        return 0;
    }

    if (gs->parsed()) {
        SbmSpec spec{gs_n, gs_k, gs_snr, gs_degree, seed};
        auto [g, labels] = generate_sbm(spec);
        save_edge_list(g, gs_output + ".edges");
        save_labels(labels, gs_output + ".labels");
        std::cout << "n=" << g.num_nodes() << " m=" << g.num_edges()
                  << " avg_degree=" << format_value(2.0 * g.num_edges() / gs_n) << "\n";
        return 0;
    }

    if (sw->parsed()) {
        Graph g = load_input(sw_input);
        SweepOptions opt;
        opt.methods.clear();
        for (const auto& name : sw_methods) opt.methods.push_back(method_from_string(name));
        if (!sw_degrees.empty()) opt.degrees = sw_degrees;
        opt.num_seeds = sw_seeds;
        opt.what = sw_what == "clustering" ? SweepWhat::clustering : SweepWhat::metrics;
        opt.auto_mode = sw_mode == "auto";
        opt.mode = sw_mode == "slq" ? Mode::slq : Mode::exact;
        opt.slq.num_probes = sw_probes;
        opt.slq.lanczos_steps = sw_steps;
        opt.seed = seed;
        opt.jobs = jobs;

        LabelVector labels;
        const LabelVector* labels_ptr = nullptr;
        if (opt.what == SweepWhat::clustering) {
            if (sw_labels.empty()) throw input_error("sweep: --what clustering needs --labels");
            labels = load_labels(sw_labels, g.num_nodes());
            labels_ptr = &labels;
        }
        SweepResult result = degree_sweep(g, labels_ptr, opt);
        write_file(sw_output, sweep_tsv(result));
        std::cout << "rows=" << result.rows.size() << "\n";
        return 0;
    }

    if (ed->parsed()) {
        Graph g = load_input(ed_input);
        EdgeSet highlight;
        if (!ed_highlight.empty()) highlight = load_edge_list(ed_highlight).edge_list();
        write_file(ed_output, to_dot(g, highlight));
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const backbone::budget_error& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return 3;
    } catch (const backbone::numerical_error& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return 4;
    } catch (const backbone::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
