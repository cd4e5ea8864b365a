#include <doctest.h>

#include <map>
#include <set>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"
#include "backbone/generators.hpp"
#include "backbone/rng.hpp"
#include "backbone/tree.hpp"
#include "test_util.hpp"

using namespace backbone;

namespace {

bool is_spanning_tree(const Graph& g, const EdgeSet& t) {
    if (static_cast<int>(t.size()) != g.num_nodes() - 1) return false;
    DisjointSets d(g.num_nodes());
    for (auto [u, v] : t) {
        if (!g.has_edge(u, v)) return false;
        if (!d.unite(u, v)) return false; // cycle
    }
    return true;
}

} // namespace

TEST_CASE("sampled trees are spanning trees of the host graph") {
    Rng rng(11);
    for (const char* name : {"karate", "barbell:5", "complete:12", "ring:9"}) {
        Graph g = named_graph(name);
        for (int i = 0; i < 50; ++i) {
            EdgeSet t = sample_spanning_tree(g, rng);
            CHECK(is_spanning_tree(g, t));
        }
    }
}

TEST_CASE("tree input returns the tree itself") {
    Graph p = path_graph(8);
    Rng rng(3);
    EdgeSet t = sample_spanning_tree(p, rng);
    CHECK(t == p.edge_list());
    Graph s = star_graph(9);
    CHECK(sample_spanning_tree(s, rng) == s.edge_list());
}

TEST_CASE("disconnected input is rejected") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Rng rng(1);
    CHECK_THROWS_AS(sample_spanning_tree(g, rng), input_error);
}

TEST_CASE("sampler is deterministic per rng state") {
    Graph g = karate_graph();
    Rng a(77), b(77);
    for (int i = 0; i < 5; ++i) CHECK(sample_spanning_tree(g, a) == sample_spanning_tree(g, b));
}

TEST_CASE("K3 tree frequencies are uniform") {
    Graph k3 = complete_graph(3);
    Rng rng(2025);
    std::map<EdgeSet, long long> counts;
    long long trials = 3000;
    for (long long i = 0; i < trials; ++i) ++counts[sample_spanning_tree(k3, rng)];
    CHECK(counts.size() == 3);
    std::vector<long long> c;
    for (auto& [t, n] : counts) c.push_back(n);
    CHECK(testutil::uniformity_p(c, trials) > 0.001);
}

TEST_CASE("K4 yields all 16 trees, uniformly") {
    Graph k4 = complete_graph(4);
    auto all = testutil::enumerate_spanning_trees(k4);
    CHECK(all.size() == 16); // Cayley: 4^2

    Rng rng(808);
    std::map<EdgeSet, long long> counts;
    long long trials = 16000;
    for (long long i = 0; i < trials; ++i) ++counts[sample_spanning_tree(k4, rng)];
    CHECK(counts.size() == 16);
    std::vector<long long> c;
    for (auto& [t, n] : counts) c.push_back(n);
    CHECK(testutil::uniformity_p(c, trials) > 0.001);
}

TEST_CASE("enumeration oracle agrees with the matrix-tree corpus") {
    CHECK(testutil::enumerate_spanning_trees(path_graph(5)).size() == 1);
    CHECK(testutil::enumerate_spanning_trees(ring_graph(6)).size() == 6);
    CHECK(testutil::enumerate_spanning_trees(complete_graph(3)).size() == 3);
    CHECK(testutil::enumerate_spanning_trees(complete_graph(5)).size() == 125); // 5^3
    CHECK(testutil::enumerate_spanning_trees(barbell_graph(3)).size() == 9);    // 3 * 3 * 1
    // K4 minus one edge: 16 - trees through that edge = 8
    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(testutil::enumerate_spanning_trees(k4e).size() == 8);
}

TEST_CASE("random_select: exact subset size, uniform over subsets") {
    EdgeSet edges = complete_graph(4).edge_list(); // 6 edges
    Rng rng(55);
    CHECK(random_select(edges, 0, rng).empty());
    CHECK(random_select(edges, 6, rng) == edges);
    EdgeSet one = random_select(edges, 1, rng);
    CHECK(one.size() == 1);
    CHECK_THROWS_AS(random_select(edges, 7, rng), input_error);
    CHECK_THROWS_AS(random_select(edges, -1, rng), input_error);

    // all C(6,2)=15 pairs should come out uniformly
    std::map<EdgeSet, long long> counts;
    long long trials = 15000;
    for (long long i = 0; i < trials; ++i) ++counts[random_select(edges, 2, rng)];
    CHECK(counts.size() == 15);
    std::vector<long long> c;
    for (auto& [s, n] : counts) {
        CHECK(s.size() == 2);
        c.push_back(n);
    }
    CHECK(testutil::uniformity_p(c, trials) > 0.001);
}

TEST_CASE("edge inclusion frequencies") {
    Rng rng(4242);
    // every edge of a tree is in every spanning tree
    Graph p = path_graph(6);
    auto fp = edge_inclusion_frequency(p, 50, rng);
    for (double f : fp) CHECK(f == doctest::Approx(1.0));

    // K3: each edge in 2 of the 3 trees
    Graph k3 = complete_graph(3);
    auto fk = edge_inclusion_frequency(k3, 20000, rng);
    for (double f : fk) CHECK(f == doctest::Approx(2.0 / 3.0).epsilon(0.03));

    // the barbell bridge is a cut edge
    Graph b = barbell_graph(4);
    auto fb = edge_inclusion_frequency(b, 200, rng);
    EdgeSet el = b.edge_list();
    for (size_t i = 0; i < el.size(); ++i)
        if (el[i] == Edge{3, 4}) CHECK(fb[i] == doctest::Approx(1.0));
}
