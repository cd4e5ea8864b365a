#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <queue>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/generators.hpp"
#include "backbone/rng.hpp"
#include "backbone/sparsify.hpp"
#include "backbone/spectral.hpp"

using namespace backbone;

namespace {

// BFS eccentricity -> exact diameter; small graphs only
int diameter(const Graph& g) {
    int diam = 0;
    for (int s = 0; s < g.num_nodes(); ++s) {
        std::vector<int> dist(g.num_nodes(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int d : dist) diam = std::max(diam, d);
    }
    return diam;
}

// second-smallest eigenvalue of the normalized Laplacian I - D^-1/2 A D^-1/2
double normalized_lambda2(const Graph& g) {
    int n = g.num_nodes();
    Eigen::MatrixXd nl = Eigen::MatrixXd::Identity(n, n);
    for (auto [u, v] : g.edge_list()) {
        double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        nl(u, v) = -w;
        nl(v, u) = -w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nl, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(1);
}

// exact conductance min over cuts: |cut(S)| / min(vol S, vol S^c); n <= ~16
double exact_conductance(const Graph& g) {
    int n = g.num_nodes();
    double vol_total = 2.0 * g.num_edges();
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        double vol = 0.0;
        long long cut = 0;
        for (int u = 0; u < n; ++u)
            if (mask >> u & 1) vol += g.degree(u);
        if (vol == 0.0 || vol == vol_total) continue;
        for (auto [u, v] : g.edge_list())
            if (((mask >> u) & 1) != ((mask >> v) & 1)) ++cut;
        best = std::min(best, cut / std::min(vol, vol_total - vol));
    }
    return best;
}

} // namespace

TEST_CASE("dense spectrum of tiny graphs") {
    auto k3 = dense_spectrum(complete_graph(3));
    REQUIRE(k3.laplacian.size() == 3);
    CHECK(k3.laplacian[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(k3.laplacian[1] == doctest::Approx(3.0));
    CHECK(k3.laplacian[2] == doctest::Approx(3.0));
    CHECK(k3.adjacency[0] == doctest::Approx(-1.0));
    CHECK(k3.adjacency[2] == doctest::Approx(2.0));

    auto p3 = dense_spectrum(path_graph(3));
    CHECK(p3.laplacian[1] == doctest::Approx(1.0));
    CHECK(p3.laplacian[2] == doctest::Approx(3.0));

    CHECK_THROWS_AS(dense_spectrum(complete_graph(5), 4), input_error);
}

TEST_CASE("spectral radius on closed forms") {
    CHECK(spectral_radius(complete_graph(4)) == doctest::Approx(3.0));
    CHECK(spectral_radius(complete_graph(20)) == doctest::Approx(19.0));
    CHECK(spectral_radius(ring_graph(8)) == doctest::Approx(2.0));
    CHECK(spectral_radius(star_graph(17)) == doctest::Approx(4.0));
    CHECK(spectral_radius(path_graph(2)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spectral_radius(Graph::from_edges(3, {})), input_error);
}

TEST_CASE("principal vector: positive, unit, eigen-equation") {
    Graph g = star_graph(5);
    auto x = adjacency_principal_vector(g);
    double norm = 0.0;
    for (double v : x) norm += v * v;
    CHECK(norm == doctest::Approx(1.0));
    for (double v : x) CHECK(v > 0.0);
    // A x = lambda x
    auto ax = adjacency_multiply(g, x);
    double lambda = spectral_radius(g);
    for (size_t i = 0; i < x.size(); ++i) CHECK(ax[i] == doctest::Approx(lambda * x[i]).epsilon(1e-7));
    // center of the star carries the largest mass
    CHECK(x[0] > x[1]);
}

TEST_CASE("algebraic connectivity on closed forms") {
    CHECK(algebraic_connectivity(complete_graph(6)) == doctest::Approx(6.0));
    CHECK(algebraic_connectivity(path_graph(3)) == doctest::Approx(1.0));
    CHECK(algebraic_connectivity(ring_graph(4)) == doctest::Approx(2.0));
    CHECK(algebraic_connectivity(path_graph(2)) == doctest::Approx(2.0));
    // disconnected -> 0, singleton -> 0
    CHECK(algebraic_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0.0);
    CHECK(algebraic_connectivity(Graph::from_edges(1, {})) == 0.0);
}

TEST_CASE("algebraic connectivity matches the dense oracle") {
    Rng rng(31);
    std::vector<Graph> corpus;
    corpus.push_back(karate_graph());
    corpus.push_back(barbell_graph(5));
    corpus.push_back(ring_graph(40));
    corpus.push_back(path_graph(60));
    SbmSpec spec;
    spec.n = 300;
    spec.k = 3;
    spec.snr = 6.0;
    spec.avg_degree = 20.0;
    spec.seed = 404;
    auto [sbm, labels] = generate_sbm(spec);
    corpus.push_back(largest_component(sbm).graph);
    // tree-like backbone: the hard case for the iterative path
    Rng srng(5);
    corpus.push_back(sparsify(corpus.back(), Method::ktree, corpus.back().num_nodes() - 1, srng));
    for (const Graph& g : corpus) {
        double fast = algebraic_connectivity(g);
        double exact = dense_spectrum(g).laplacian[1];
        CHECK(fast == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("lambda_2 lower bound 4/(n D) holds across the corpus") {
    for (const char* name :
         {"karate", "path:20", "ring:15", "star:12", "barbell:6", "complete:9"}) {
        Graph g = named_graph(name);
        double l2 = dense_spectrum(g).laplacian[1];
        CHECK(l2 >= 4.0 / (static_cast<double>(g.num_nodes()) * diameter(g)) - 1e-12);
    }
}

TEST_CASE("normalized Cheeger sandwich on exhaustively cut graphs") {
    // h^2/2 <= lambda2(normalized L) <= 2 h, h the volume conductance
    for (const char* name : {"karate", "path:10", "ring:9", "star:8", "barbell:5", "complete:7"}) {
        Graph g = named_graph(name);
        if (g.num_nodes() > 16) continue; // exhaustive cuts only
        double h = exact_conductance(g);
        double l2n = normalized_lambda2(g);
        CHECK(l2n <= 2.0 * h + 1e-9);
        CHECK(l2n >= h * h / 2.0 - 1e-9);
    }
}

TEST_CASE("pair effective resistance on closed forms") {
    // tree: path length; K3 edge: 2/3; C4 opposite corners: 1
    Graph p4 = path_graph(4);
    CHECK(pair_effective_resistance(p4, 0, 3) == doctest::Approx(3.0));
    CHECK(pair_effective_resistance(p4, 1, 2) == doctest::Approx(1.0));
    CHECK(pair_effective_resistance(complete_graph(3), 0, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(pair_effective_resistance(ring_graph(4), 0, 2) == doctest::Approx(1.0));
    // K_n edge: 2/n
    CHECK(pair_effective_resistance(complete_graph(10), 3, 7) == doctest::Approx(0.2));
    CHECK(pair_effective_resistance(p4, 2, 2) == doctest::Approx(0.0));
    CHECK_THROWS_AS(pair_effective_resistance(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0, 2),
                    input_error);
}

TEST_CASE("all_edge_resistances matches the pairwise solver and Foster's theorem") {
    for (const char* name : {"karate", "barbell:4", "ring:10"}) {
        Graph g = named_graph(name);
        auto om = all_edge_resistances(g);
        EdgeSet el = g.edge_list();
        REQUIRE(om.size() == el.size());
        double sum = 0.0;
        for (size_t i = 0; i < el.size(); ++i) {
            sum += om[i];
            if (i % 7 == 0) // spot-check alignment against the CG path
                CHECK(om[i] ==
                      doctest::Approx(pair_effective_resistance(g, el[i].first, el[i].second))
                          .epsilon(1e-7));
        }
        // Foster: sum of edge resistances = n - 1
        CHECK(sum == doctest::Approx(g.num_nodes() - 1.0).epsilon(1e-8));
    }
}

TEST_CASE("total effective resistance, exact closed forms") {
    CHECK(total_effective_resistance(complete_graph(3), Mode::exact) == doctest::Approx(2.0));
    CHECK(total_effective_resistance(complete_graph(4), Mode::exact) == doctest::Approx(3.0));
    CHECK(total_effective_resistance(path_graph(3), Mode::exact) == doctest::Approx(4.0));
    // K_n: R = n * (n-1) * (1/n) = n - 1
    CHECK(total_effective_resistance(complete_graph(12), Mode::exact) == doctest::Approx(11.0));
    // matches the pairwise definition sum_{i<j} omega(i,j) on a small graph
    Graph b = barbell_graph(3);
    double pairwise = 0.0;
    for (int i = 0; i < b.num_nodes(); ++i)
        for (int j = i + 1; j < b.num_nodes(); ++j)
            pairwise += pair_effective_resistance(b, i, j);
    CHECK(total_effective_resistance(b, Mode::exact) == doctest::Approx(pairwise).epsilon(1e-8));
}

TEST_CASE("log spanning tree count, exact closed forms") {
    // trees: the product is n * tau = n
    CHECK(log_num_spanning_trees(path_graph(5), Mode::exact) == doctest::Approx(std::log(5.0)));
    CHECK(log_num_spanning_trees(complete_graph(3), Mode::exact) == doctest::Approx(std::log(9.0)));
    CHECK(log_num_spanning_trees(complete_graph(4), Mode::exact) ==
          doctest::Approx(std::log(64.0)));
    CHECK(log_num_spanning_trees(ring_graph(7), Mode::exact) ==
          doctest::Approx(std::log(7.0) + std::log(7.0))); // n * tau = 7 * 7
    // Cayley cross-check: tau(K6) = 6^4
    CHECK(log_num_spanning_trees(complete_graph(6), Mode::exact) ==
          doctest::Approx(std::log(6.0 * std::pow(6.0, 4))));
}

TEST_CASE("triangle metric: exact mode is the count") {
    CHECK(triangle_count(complete_graph(4), Mode::exact) == doctest::Approx(4.0));
    CHECK(triangle_count(karate_graph(), Mode::exact) == doctest::Approx(45.0));
    CHECK(triangle_count(path_graph(9), Mode::exact) == doctest::Approx(0.0));
}

TEST_CASE("clustering coefficients, frozen oracles") {
    CHECK(global_clustering_coefficient(complete_graph(3)) == doctest::Approx(1.0));
    CHECK(global_clustering_coefficient(complete_graph(7)) == doctest::Approx(1.0));
    CHECK(global_clustering_coefficient(star_graph(9)) == doctest::Approx(0.0));
    CHECK(global_clustering_coefficient(path_graph(2)) == doctest::Approx(0.0)); // no wedges

    // K4 minus an edge: 2 triangles, ordered wedges 2*(3*2)+2*(2*1)=16,
    // gcc = 6*2/16 = 0.75; local ccs are 2/3, 2/3, 1, 1 -> mean 5/6
    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(global_clustering_coefficient(k4e) == doctest::Approx(0.75));
    CHECK(avg_local_clustering(k4e) == doctest::Approx(5.0 / 6.0));

    // karate, against networkx
    CHECK(global_clustering_coefficient(karate_graph()) == doctest::Approx(0.2556818181818));
    CHECK(avg_local_clustering(karate_graph()) == doctest::Approx(0.5706384782076));

    // degree < 2 nodes contribute zero: star avg is 0, single edge is 0
    CHECK(avg_local_clustering(star_graph(5)) == doctest::Approx(0.0));
    CHECK(avg_local_clustering(path_graph(2)) == doctest::Approx(0.0));
}

TEST_CASE("karate dense metrics, frozen against an external run") {
    Graph g = karate_graph();
    auto r = compute_metrics(g, Mode::exact);
    CHECK(r.algebraic_connectivity == doctest::Approx(0.4685252267).epsilon(1e-8));
    CHECK(r.spectral_radius == doctest::Approx(6.725697728).epsilon(1e-8));
    CHECK(r.effective_resistance == doctest::Approx(470.268184985).epsilon(1e-8));
    CHECK(r.log_num_trees == doctest::Approx(39.692610472).epsilon(1e-8));
    CHECK(r.num_triangles == doctest::Approx(45.0));
    CHECK(r.global_cc == doctest::Approx(0.2556818182).epsilon(1e-8));
    CHECK(r.avg_local_cc == doctest::Approx(0.5706384782).epsilon(1e-8));
    CHECK(r.finite_condition_number == doctest::Approx(38.710180241).epsilon(1e-8));
}

TEST_CASE("metrics on disconnected and trivial graphs") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto r = compute_metrics(g, Mode::exact);
    CHECK(r.algebraic_connectivity == 0.0);
    CHECK(std::isinf(r.effective_resistance));
    CHECK(std::isinf(r.log_num_trees));
    CHECK(r.log_num_trees < 0); // log of zero trees
    CHECK(std::isinf(r.finite_condition_number));
    CHECK(r.num_triangles == 0.0);

    Graph one = Graph::from_edges(1, {});
    auto r1 = compute_metrics(one, Mode::exact);
    CHECK(r1.effective_resistance == 0.0);
    CHECK(r1.log_num_trees == 0.0); // one empty tree
}

TEST_CASE("metric name/value order is pinned") {
    auto names = metric_names();
    REQUIRE(names.size() == 8);
    CHECK(names[0] == "algebraic_connectivity");
    CHECK(names[1] == "spectral_radius");
    CHECK(names[2] == "effective_resistance");
    CHECK(names[3] == "log_num_trees");
    CHECK(names[4] == "num_triangles");
    CHECK(names[5] == "global_cc");
    CHECK(names[6] == "avg_local_cc");
    CHECK(names[7] == "finite_condition_number");

    MetricsReport r;
    r.algebraic_connectivity = 1;
    r.spectral_radius = 2;
    r.effective_resistance = 3;
    r.log_num_trees = 4;
    r.num_triangles = 5;
    r.global_cc = 6;
    r.avg_local_cc = 7;
    r.finite_condition_number = 8;
    auto vals = metric_values(r);
    for (int i = 0; i < 8; ++i) CHECK(vals[i] == doctest::Approx(i + 1.0));

    // wide TSV row matches the header column-for-column
    std::string header = metrics_tsv_header();
    std::string row = metrics_tsv_row(r);
    CHECK(std::count(header.begin(), header.end(), '\t') ==
          std::count(row.begin(), row.end(), '\t'));
}
