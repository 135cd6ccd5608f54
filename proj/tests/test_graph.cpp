#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpchroma/corpus.hpp"
#include "dpchroma/graph.hpp"

#include <filesystem>
#include <fstream>
#include <set>

using namespace dpchroma;

TEST_CASE("parse a 4-cycle") {
    const auto parsed = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    CHECK(parsed.graph.vertex_count() == 4);
    CHECK(parsed.graph.edge_count() == 4);
    CHECK(girth(parsed.graph) == 4);
}

TEST_CASE("parse a single edge") {
    const auto parsed = parse_edge_list("0 1");
    CHECK(parsed.graph.vertex_count() == 2);
    CHECK(parsed.graph.edge_count() == 1);
}

TEST_CASE("parse rejects loops, duplicates and junk") {
    CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_edge_list("0 1\nbad line\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("parse honors comments and the n= header") {
    const auto parsed = parse_edge_list("# a path plus isolated vertices\nn=5\n0 1\n1 2\n");
    CHECK(parsed.graph.vertex_count() == 5);
    CHECK(parsed.graph.edge_count() == 2);
    CHECK_FALSE(parsed.graph.is_connected());
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 1\n1 2\n"), ValidationError);
    const auto edgeless = parse_edge_list("n=3\n");
    CHECK(edgeless.graph.vertex_count() == 3);
    CHECK(edgeless.graph.edge_count() == 0);
}

TEST_CASE("sparse labels are remapped densely with the mapping recorded") {
    const auto parsed = parse_edge_list("10 40\n40 70\n");
    CHECK(parsed.graph.vertex_count() == 3);
    CHECK(parsed.labels == std::vector<long long>{10, 40, 70});
    CHECK(parsed.graph.edge_index(0, 1) >= 0);
    CHECK(parsed.graph.edge_index(1, 2) >= 0);
}

TEST_CASE("named generators") {
    CHECK(make_named_graph("C5").edge_count() == 5);
    CHECK(make_named_graph("Cn 5").edge_count() == 5);
    CHECK(make_named_graph("K4").edge_count() == 6);
    CHECK(make_named_graph("P6").edge_count() == 5);
    CHECK(make_named_graph("W4").vertex_count() == 5);
    CHECK(make_named_graph("cone:C4").edge_count() == 8);
    const Graph glue = make_named_graph("glue-cycles 3");
    CHECK(glue.vertex_count() == 6);
    CHECK(glue.edge_count() == 7);
    CHECK(girth(glue) == 3);
    CHECK(count_cycles_of_length(glue, 3) == 1);
    CHECK(count_cycles_of_length(glue, 4) == 1);
    CHECK_THROWS_AS(make_named_graph("Q7"), ParseError);
}

TEST_CASE("the cone generator also accepts an edge-list file") {
    const auto path = std::filesystem::temp_directory_path() / "dpchroma-gen-c4.txt";
    {
        std::ofstream f(path);
        f << "0 1\n1 2\n2 3\n3 0\n";
    }
    const Graph w4 = make_named_graph("cone " + path.string());
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.edge_count() == 8);
    std::filesystem::remove(path);
}

TEST_CASE("girth") {
    CHECK(girth(make_named_graph("C5")) == 5);
    CHECK(girth(make_named_graph("K4")) == 3);
    CHECK(girth(make_named_graph("P4")) == kGirthInfinity);
    CHECK(girth(make_named_graph("glue:5")) == 5);
}

TEST_CASE("component counts over edge subsets") {
    const Graph c4 = make_named_graph("C4");
    CHECK(component_count(c4, 0) == 4);
    CHECK(component_count(c4, 0b1111) == 1);
    CHECK(component_count(c4, 0b0001) == 3);
}

TEST_CASE("component count is monotone under adding edges") {
    SplitMix64 rng(23);
    const Graph g = make_named_graph("cone:C5");
    const EdgeMask all = (EdgeMask{1} << g.edge_count()) - 1;
    for (int trial = 0; trial < 200; ++trial) {
        const EdgeMask a = rng.next() & all;
        const EdgeMask b = a | (rng.next() & all);
        const int ca = component_count(g, a);
        CHECK(ca >= 1);
        CHECK(ca <= g.vertex_count());
        CHECK(component_count(g, b) <= ca);
    }
}

TEST_CASE("spanning tree is the deterministic BFS tree") {
    const Graph c4 = make_named_graph("C4");  // edges (0,1) (0,3) (1,2) (2,3)
    const EdgeMask tree = spanning_tree(c4);
    CHECK(popcount(tree) == 3);
    CHECK((tree & (EdgeMask{1} << c4.edge_index(0, 1))) != 0);
    CHECK((tree & (EdgeMask{1} << c4.edge_index(0, 3))) != 0);
    CHECK((tree & (EdgeMask{1} << c4.edge_index(1, 2))) != 0);
    CHECK_THROWS_AS(spanning_tree(parse_edge_list("n=3\n0 1\n").graph), ValidationError);
}

TEST_CASE("girth is infinite exactly when a spanning forest uses every edge") {
    for (const auto& g : connected_graph_corpus(5)) {
        const bool acyclic = g.edge_count() == g.vertex_count() - 1;
        CHECK((girth(g) == kGirthInfinity) == acyclic);
        if (girth(g) != kGirthInfinity) CHECK(count_cycles_of_length(g, girth(g)) >= 1);
    }
}

TEST_CASE("cycle counting") {
    CHECK(count_cycles_of_length(make_named_graph("K4"), 3) == 4);
    CHECK(count_cycles_of_length(make_named_graph("C5"), 5) == 1);
    CHECK(count_cycles_of_length(make_named_graph("C5"), 3) == 0);
    // brute oracle on K5 triangles: any 3 of 5 vertices form one
    CHECK(count_cycles_of_length(make_named_graph("K5"), 3) == 10);
    CHECK_THROWS_AS(count_cycles_of_length(make_named_graph("K4"), 2), ValidationError);
}

TEST_CASE("cone structure") {
    const Graph k1 = Graph::edgeless(1);
    const Graph k2 = cone(k1);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph c4 = make_named_graph("C4");
    const Graph w4 = cone(c4);
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.edge_count() == 8);
    CHECK(find_apex(w4) == 4);
    for (int v = 0; v < 4; ++v) CHECK(w4.degree(v) == c4.degree(v) + 1);

    const Graph k4 = cone(make_named_graph("K3"));
    CHECK(refined_canonical_key(k4) == refined_canonical_key(make_named_graph("K4")));
}

TEST_CASE("star tree covers the apex edges") {
    const Graph w4 = make_named_graph("W4");
    const EdgeMask star = star_tree(w4, 4);
    CHECK(popcount(star) == 4);
    CHECK(component_count(w4, star) == 1);
    CHECK_THROWS_AS(star_tree(w4, 0), ValidationError);
}

TEST_CASE("refined canonical key separates small non-isomorphic graphs") {
    CHECK(refined_canonical_key(make_named_graph("C4")) != refined_canonical_key(make_named_graph("P4")));
    // degree refinement pins the path down under relabeling; the key is only
    // sound (equal keys mean identical relabeled graphs), not complete
    CHECK(refined_canonical_key(make_named_graph("P4")) ==
          refined_canonical_key(parse_edge_list("2 0\n0 1\n1 3\n").graph));
}

TEST_CASE("connected corpus sizes") {
    // one representative of every isomorphism class is present
    const auto corpus = connected_graph_corpus(4);
    CHECK(corpus.size() >= 1 + 1 + 2 + 6);
    std::set<std::string> keys;
    for (const auto& g : corpus) keys.insert(refined_canonical_key(g));
    CHECK(keys.size() == corpus.size());
}

TEST_CASE("random trees are trees") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + rng.below_int(9);
        const Graph t = random_tree(rng, n);
        CHECK(t.vertex_count() == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(t.is_connected());
    }
}
