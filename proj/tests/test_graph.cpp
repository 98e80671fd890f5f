#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covpoly/graph.hpp"
#include "support/oracles.hpp"

using namespace covpoly;

TEST_CASE("edge deletion") {
    Multigraph k2 = make_complete(2);
    CHECK(k2.delete_edge(0) == make_edgeless(2));

    Multigraph c3 = make_cycle(3);
    CHECK(covpoly::testing::brute_force_isomorphic(c3.delete_edge(0), make_path(3)));

    Multigraph parallel(2, {{0, 1}, {0, 1}});
    CHECK(parallel.delete_edge(0) == make_complete(2));

    CHECK_THROWS_AS(k2.delete_edge(5), MissingEdgeError);
    CHECK_THROWS_AS(k2.find_edge({0, 2}), MissingEdgeError);
    CHECK(k2.find_edge({1, 0}) == 0);
}

TEST_CASE("edge contraction") {
    Multigraph p3 = make_path(3);
    CHECK(p3.contract_edge(0) == make_complete(2));

    Multigraph c2 = make_cycle(2);
    Multigraph loop_vertex(1, {{0, 0}});
    CHECK(c2.contract_edge(0) == loop_vertex);

    // contracting a loop merges a vertex with itself
    CHECK(loop_vertex.contract_edge(0) == make_path(1));

    // parallel edges may occur
    Multigraph c4 = make_cycle(4);
    Multigraph contracted = c4.contract_edge(0);
    CHECK(covpoly::testing::brute_force_isomorphic(contracted, make_cycle(3)));
}

TEST_CASE("edge extraction") {
    CHECK(make_complete(2).extract_edge(0) == Multigraph(0, {}));
    CHECK(make_path(3).extract_edge(0) == make_edgeless(1));
    CHECK(make_complete(3).extract_edge(0) == make_path(1));
    Multigraph loop_vertex(1, {{0, 0}});
    CHECK(loop_vertex.extract_edge(0) == Multigraph(0, {}));
}

TEST_CASE("vertex deletion") {
    CHECK(make_complete(3).delete_vertex(0) == make_complete(2));
    CHECK(make_star(3).delete_vertex(0) == make_edgeless(3));
    CHECK(make_path(1).delete_vertex(0) == Multigraph(0, {}));
    CHECK_THROWS_AS(make_path(1).delete_vertex(3), VertexOutOfRangeError);
}

TEST_CASE("component stats") {
    auto st = component_stats(make_edgeless(3));
    CHECK(st.components == 3);
    CHECK(st.covered == 0);
    CHECK(st.isolated == 3);

    Multigraph k2_plus_k1(3, {{0, 1}});
    st = component_stats(k2_plus_k1);
    CHECK(st.components == 2);
    CHECK(st.covered == 1);
    CHECK(st.isolated == 1);

    st = component_stats(Multigraph(1, {{0, 0}}));  // a loop covers its vertex
    CHECK(st.components == 1);
    CHECK(st.covered == 1);
    CHECK(st.isolated == 0);
}

TEST_CASE("k = c + i holds on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng, {.max_n = 10, .max_m = 14});
        auto st = component_stats(g);
        CHECK(st.components == st.covered + st.isolated);
        CHECK(st.covered <= g.edge_count());
    }
}

TEST_CASE("structural queries") {
    // P4 edges sort as {0,1},{1,2},{2,3}
    auto rep = structural_queries(make_path(4));
    CHECK(rep.pendant_edges == std::vector<int>{0, 2});
    CHECK(rep.bridges == std::vector<int>{0, 1, 2});
    CHECK(rep.articulation_vertices == std::vector<int>{1, 2});

    rep = structural_queries(make_cycle(4));
    CHECK(rep.pendant_edges.empty());
    CHECK(rep.bridges.empty());
    CHECK(rep.articulation_vertices.empty());

    rep = structural_queries(make_complete(2));
    CHECK(rep.pendant_edges == std::vector<int>{0});
    CHECK(rep.bridges == std::vector<int>{0});
    CHECK(rep.articulation_vertices.empty());

    // a loop is never a pendant edge
    Multigraph lollipop(2, {{0, 0}, {0, 1}});
    rep = structural_queries(lollipop);
    CHECK(rep.pendant_edges == std::vector<int>{1});
}

TEST_CASE("deleting an edge changes k by at most one") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            covpoly::testing::enumerate_multigraphs(n, m, [&](const Multigraph& g) {
                const int k = component_stats(g).components;
                for (int i = 0; i < g.edge_count(); ++i) {
                    const int k2 = component_stats(g.delete_edge(i)).components;
                    CHECK((k2 == k || k2 == k + 1));
                }
            });
}

TEST_CASE("extraction removes exactly the incident vertices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng);
        for (int i = 0; i < g.edge_count(); ++i) {
            const int incident = g.is_loop(i) ? 1 : 2;
            CHECK(g.extract_edge(i).vertex_count() == g.vertex_count() - incident);
        }
    }
}

TEST_CASE("families") {
    CHECK(make_family(FamilyKind::Path, 1) == make_complete(1));
    Multigraph c2 = make_family(FamilyKind::Cycle, 2);
    CHECK(c2.vertex_count() == 2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.has_parallel_edges());
    Multigraph c1 = make_family(FamilyKind::Cycle, 1);
    CHECK(c1.vertex_count() == 1);
    CHECK(c1.has_loop());
    Multigraph s3 = make_family(FamilyKind::Star, 3);
    CHECK(s3.vertex_count() == 4);
    CHECK(s3.edge_count() == 3);
    CHECK(covpoly::testing::brute_force_isomorphic(make_wheel(3), make_complete(4)));
    CHECK_THROWS_AS(make_cycle(0), InvalidSizeError);
    CHECK_THROWS_AS(make_wheel(2), InvalidSizeError);
    CHECK_THROWS_AS(make_family(FamilyKind::Path, -1), InvalidSizeError);
}

TEST_CASE("line graphs") {
    CHECK(line_graph(make_path(3)) == make_complete(2));
    CHECK(covpoly::testing::brute_force_isomorphic(line_graph(make_complete(3)), make_complete(3)));
    CHECK(covpoly::testing::brute_force_isomorphic(line_graph(make_star(3)), make_complete(3)));
    CHECK_THROWS_AS(line_graph(make_cycle(1)), NotSimpleError);
    CHECK_THROWS_AS(line_graph(make_cycle(2)), NotSimpleError);
}

TEST_CASE("hypergraph operations") {
    Hypergraph h(4, {{0, 1, 2}, {2, 3}});
    CHECK(h.max_arity() == 3);
    CHECK(h.edge_count() == 2);

    // deleting keeps vertices
    Hypergraph del = h.delete_edge(0);
    CHECK(del.vertex_count() == 4);
    CHECK(del.edge_count() == 1);

    // contracting {0,1,2} merges three vertices into vertex 0
    Hypergraph con = h.contract_edge(0);
    CHECK(con.vertex_count() == 2);
    CHECK(con.edges() == std::vector<Hypergraph::Edge>{{0, 1}});

    // extraction drops incident edges along with the vertices
    Hypergraph ext = h.extract_edge(0);
    CHECK(ext.vertex_count() == 1);
    CHECK(ext.edge_count() == 0);

    // arity-2 contraction agrees with the multigraph operation
    Hypergraph p3(Hypergraph(3, {{0, 1}, {1, 2}}));
    CHECK(p3.contract_edge(0).to_multigraph() == make_path(3).contract_edge(0));

    CHECK_THROWS_AS(Hypergraph(2, {{}}), InvalidSizeError);
    CHECK_THROWS_AS(h.to_multigraph(), InvalidSizeError);
    CHECK(Hypergraph(make_cycle(2)).to_multigraph() == make_cycle(2));
    auto st = component_stats(Hypergraph(5, {{0, 1, 2}}));
    CHECK(st.components == 3);
    CHECK(st.covered == 1);
    CHECK(st.isolated == 2);
}
