#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "covpoly/graph_io.hpp"
#include "support/oracles.hpp"

using namespace covpoly;

TEST_CASE("graph6 fixed encodings") {
    CHECK(graph6_encode(make_complete(2)) == "A_");
    CHECK(graph6_decode("A_") == make_complete(2));
    CHECK(graph6_encode(make_path(3)) == "Bg");

    CHECK(graph6_encode(Multigraph(0, {})) == "?");
    CHECK(graph6_encode(make_edgeless(1)) == "@");
    CHECK(graph6_encode(make_edgeless(2)) == "A?");
    CHECK(graph6_encode(make_edgeless(3)) == "B?");
    for (int n = 0; n <= 3; ++n) {
        const std::string s = graph6_encode(make_edgeless(n));
        CHECK(graph6_decode(s) == make_edgeless(n));
    }

    CHECK(graph6_decode(">>graph6<<A_") == make_complete(2));
}

TEST_CASE("graph6 large vertex counts") {
    Multigraph g = make_edgeless(100);
    const std::string s = graph6_encode(g);
    CHECK(s.size() == 4u + (100u * 99u / 2u + 5u) / 6u);
    CHECK(s[0] == 126);
    CHECK(graph6_decode(s) == g);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("B"), ParseError);       // truncated bit data
    CHECK_THROWS_AS(graph6_decode("A_X"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(graph6_decode("A\x1f"), ParseError);   // byte below range
    CHECK_THROWS_AS(graph6_decode("Bh"), ParseError);      // nonzero padding
    try {
        graph6_decode("B");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
    }
    CHECK_THROWS_AS(graph6_encode(make_cycle(2)), NotSimpleError);
    CHECK_THROWS_AS(graph6_encode(make_cycle(1)), NotSimpleError);
}

TEST_CASE("graph6 round trip on random simple graphs") {
    std::mt19937_64 rng(31);
    covpoly::testing::RandomGraphOptions opt{
        .max_n = 10, .max_m = 20, .allow_loops = false, .allow_parallel = false};
    for (int trial = 0; trial < 500; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng, opt);
        const std::string s = graph6_encode(g);
        CHECK(graph6_decode(s) == g);
        CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("graph6 file reading") {
    const std::string path = "g6_test_tmp.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<\n";
        out << graph6_encode(make_complete(2)) << "\n";
        out << "\n";
        out << graph6_encode(make_path(3)) << "\n";
    }
    auto graphs = read_graph6_file(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == make_complete(2));
    CHECK(graphs[1] == make_path(3));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph6_file("does_not_exist.g6"), Error);
}

TEST_CASE("edge list text format") {
    Multigraph k2 = parse_edge_list_multigraph("2 1\n0 1\n");
    CHECK(k2 == make_complete(2));

    Hypergraph h = parse_edge_list("4 3\n0\n1 2\n1 2 3\n");
    CHECK(h.vertex_count() == 4);
    CHECK(h.max_arity() == 3);
    CHECK(format_edge_list(h) == "4 3\n0\n1 2\n1 2 3\n");

    Multigraph with_loop = parse_edge_list_multigraph("2 2\n0\n0 1\n");
    CHECK(with_loop == Multigraph(2, {{0, 0}, {0, 1}}));
    CHECK(format_edge_list(with_loop) == "2 2\n0\n0 1\n");

    CHECK_THROWS_AS(parse_edge_list("x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 z\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_multigraph("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng);
        CHECK(parse_edge_list_multigraph(format_edge_list(g)) == g);
        Hypergraph hg = covpoly::testing::random_hypergraph(rng, 6, 6, 4);
        CHECK(parse_edge_list(format_edge_list(hg)) == hg);
    }
}
