#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "backbone/errors.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"

using namespace backbone;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("load_edge_list parses plain pairs") {
    TempFile f("io_plain.edges", "0 1\n1 2\n");
    Graph g = load_edge_list(f.path);
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("load_edge_list honors comments, blank lines, and nodes= header") {
    TempFile f("io_header.edges", "# a comment\n# nodes=5\n\n0 1\n\n# another\n2 3\n");
    Graph g = load_edge_list(f.path);
    CHECK(g.num_nodes() == 5); // isolated node 4 preserved
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("load_edge_list error cases carry file and line") {
    TempFile bad("io_bad.edges", "0 1\nx 2\n");
    try {
        load_edge_list(bad.path);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("io_bad.edges") != std::string::npos);
        CHECK(msg.find(":2") != std::string::npos);
    }

    TempFile trailing("io_trail.edges", "0 1 7\n");
    CHECK_THROWS_AS(load_edge_list(trailing.path), input_error);

    TempFile neg("io_neg.edges", "0 -1\n");
    CHECK_THROWS_AS(load_edge_list(neg.path), input_error);

    TempFile small_header("io_small.edges", "# nodes=2\n0 5\n");
    CHECK_THROWS_AS(load_edge_list(small_header.path), input_error);

    CHECK_THROWS_AS(load_edge_list("does_not_exist.edges"), input_error);
}

TEST_CASE("save/load edge list round-trips") {
    Graph g = barbell_graph(4);
    save_edge_list(g, "io_rt.edges");
    Graph back = load_edge_list("io_rt.edges");
    CHECK(back == g);
    // header keeps isolated tail nodes alive
    Graph iso = Graph::from_edges(6, {{0, 1}});
    save_edge_list(iso, "io_rt.edges");
    Graph back2 = load_edge_list("io_rt.edges");
    CHECK(back2.num_nodes() == 6);
    std::remove("io_rt.edges");
}

TEST_CASE("labels round-trip and remap to contiguous ids") {
    TempFile f("io_lab.labels", "7\n7\n3\n3\n9\n");
    LabelVector lab = load_labels(f.path, 5);
    // sorted raw values 3,7,9 -> 0,1,2
    CHECK(lab == LabelVector{1, 1, 0, 0, 2});
    save_labels(lab, "io_lab2.labels");
    LabelVector again = load_labels("io_lab2.labels", 5);
    CHECK(again == lab);
    std::remove("io_lab2.labels");
}

TEST_CASE("labels count must match node count") {
    TempFile f("io_lab3.labels", "0\n1\n");
    CHECK_THROWS_AS(load_labels(f.path, 3), input_error);
}

TEST_CASE("to_dot emits every edge once, bolding the highlighted subset") {
    Graph g = complete_graph(4);
    EdgeSet hl = {{0, 1}, {2, 3}};
    std::string dot = to_dot(g, hl);
    size_t edges = 0, bold = 0, pos = 0;
    while ((pos = dot.find("--", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    pos = 0;
    while ((pos = dot.find("style=bold", pos)) != std::string::npos) {
        ++bold;
        pos += 1;
    }
    CHECK(edges == 6);
    CHECK(bold == 2);
    CHECK(dot.find("graph") == 0);

    EdgeSet not_subset = {{0, 1}, {1, 5}};
    CHECK_THROWS_AS(to_dot(g, not_subset), input_error);
}
