#include "backbone/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "backbone/clustering.hpp"
#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/fmt.hpp"

namespace backbone {

namespace {

struct Cell {
    Method method;
    double degree;   // as requested
    long long m_bar; // after clipping
    int rep;
    uint64_t index;  // position in the canonical enumeration
};

Mode pick_mode(const Graph& g, const SweepOptions& opt) {
    if (!opt.auto_mode) return opt.mode;
    return g.num_nodes() <= kDenseCap ? Mode::exact : Mode::slq;
}

std::vector<SweepRow> metric_rows(const std::string& method, double degree, int rep,
                                  const MetricsReport& report) {
    std::vector<SweepRow> rows;
    auto names = metric_names();
    auto values = metric_values(report);
    for (size_t i = 0; i < names.size(); ++i)
        rows.push_back({method, degree, rep, names[i], values[i], ""});
    return rows;
}

std::vector<SweepRow> failed_metric_rows(const std::string& method, double degree, int rep,
                                         const std::string& reason) {
    std::vector<SweepRow> rows;
    for (const auto& name : metric_names())
        rows.push_back({method, degree, rep, name,
                        std::numeric_limits<double>::quiet_NaN(), reason});
    return rows;
}

} // namespace

SweepResult degree_sweep(const Graph& g, const LabelVector* labels, const SweepOptions& opt) {
    if (opt.what == SweepWhat::clustering && labels == nullptr)
        throw input_error("degree_sweep: clustering sweep needs labels");
    if (opt.what == SweepWhat::clustering &&
        static_cast<int>(labels->size()) != g.num_nodes())
        throw input_error("degree_sweep: label count does not match graph");
    if (opt.num_seeds < 1) throw input_error("degree_sweep: num_seeds must be >= 1");

    Mode mode = pick_mode(g, opt);
    double natural_degree =
        g.num_nodes() > 0 ? 2.0 * static_cast<double>(g.num_edges()) / g.num_nodes() : 0.0;

    SweepResult result;
    Rng base(opt.seed);

    // clip the degree grid to the graph's own average degree
    std::vector<std::pair<double, long long>> grid; // (requested degree, m_bar)
    for (double d : opt.degrees) {
        long long m_bar = edges_for_avg_degree(d, g.num_nodes());
        if (m_bar > g.num_edges()) {
            m_bar = g.num_edges();
            result.comments.push_back("clipped: degree " + format_value(d) +
                                      " exceeds natural average degree " +
                                      format_value(natural_degree) + "; using m=" +
                                      std::to_string(m_bar));
        }
        grid.emplace_back(d, m_bar);
    }

    // full-graph reference rows come first
    if (opt.what == SweepWhat::metrics) {
        SlqConfig cfg = opt.slq;
        cfg.seed = base.split(0xf001).next_u64();
        MetricsReport report = compute_metrics(g, mode, cfg);
        for (auto& row : metric_rows("full", natural_degree, 0, report))
            result.rows.push_back(std::move(row));
    } else {
        for (int rep = 0; rep < opt.num_seeds; ++rep) {
            Rng lrng = base.split(0xf100 + static_cast<uint64_t>(rep));
            Partition part = louvain(g, lrng);
            result.rows.push_back({"full", natural_degree, rep, "nmi",
                                   nmi(part.assignment, *labels), ""});
        }
    }

    // canonical cell enumeration: method-major, then degree, then repetition
    std::vector<Cell> cells;
    for (size_t mi = 0; mi < opt.methods.size(); ++mi)
        for (size_t di = 0; di < grid.size(); ++di)
            for (int rep = 0; rep < opt.num_seeds; ++rep)
                cells.push_back({opt.methods[mi], grid[di].first, grid[di].second, rep,
                                 static_cast<uint64_t>(cells.size())});

    std::vector<std::vector<SweepRow>> cell_rows(cells.size());
    auto run_cell = [&](const Cell& cell) {
        std::string mname = method_name(cell.method);
        // two independent streams per cell: one for the sparsifier, one for scoring
        Rng srng = base.split(2 * cell.index);
        Rng crng = base.split(2 * cell.index + 1);
        try {
            Graph backbone = sparsify(g, cell.method, cell.m_bar, srng);
            if (opt.what == SweepWhat::metrics) {
                SlqConfig cfg = opt.slq;
                cfg.seed = crng.next_u64();
                MetricsReport report = compute_metrics(backbone, mode, cfg);
                cell_rows[cell.index] = metric_rows(mname, cell.degree, cell.rep, report);
            } else {
                // NMI on a disconnected backbone is not meaningful; drop the row
                if (!is_connected(backbone)) return;
                Partition part = louvain(backbone, crng);
                cell_rows[cell.index] = {{mname, cell.degree, cell.rep, "nmi",
                                          nmi(part.assignment, *labels), ""}};
            }
        } catch (const budget_error& e) {
            std::string reason = std::string("skipped: ") + e.what();
            if (opt.what == SweepWhat::metrics)
                cell_rows[cell.index] = failed_metric_rows(mname, cell.degree, cell.rep, reason);
            else
                cell_rows[cell.index] = {{mname, cell.degree, cell.rep, "nmi",
                                          std::numeric_limits<double>::quiet_NaN(), reason}};
        } catch (const std::exception& e) {
            std::string reason = std::string("failed: ") + e.what();
            if (opt.what == SweepWhat::metrics)
                cell_rows[cell.index] = failed_metric_rows(mname, cell.degree, cell.rep, reason);
            else
                cell_rows[cell.index] = {{mname, cell.degree, cell.rep, "nmi",
                                          std::numeric_limits<double>::quiet_NaN(), reason}};
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        for (const Cell& cell : cells) run_cell(cell);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                run_cell(cells[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& rows : cell_rows)
        for (auto& row : rows) result.rows.push_back(std::move(row));
    return result;
}

std::string sweep_tsv(const SweepResult& result) {
    std::string out;
    for (const auto& c : result.comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    out += "method\tdegree\tseed\tmetric\tvalue\n";
    for (const auto& row : result.rows) {
        out += row.method;
        out += '\t';
        out += format_value(row.degree);
        out += '\t';
        out += std::to_string(row.seed);
        out += '\t';
        out += row.metric;
        out += '\t';
        out += format_value(row.value);
        if (!row.note.empty()) {
            out += '\t';
            out += row.note;
        }
        out += '\n';
    }
    return out;
}

} // namespace backbone
