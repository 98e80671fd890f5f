#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covpoly/engine.hpp"
#include "covpoly/invariants.hpp"
#include "support/oracles.hpp"

using namespace covpoly;

namespace {

CcpEngine& engine() {
    static CcpEngine e;
    return e;
}

}  // namespace

TEST_CASE("basic counts") {
    auto bc = basic_counts(engine().ccp(make_cycle(3)));
    CHECK(bc.n == 3);
    CHECK(bc.m == 3);
    CHECK(bc.k == 1);
    CHECK(bc.c == 1);
    CHECK(bc.i == 0);

    bc = basic_counts(engine().ccp(Multigraph(3, {{0, 1}})));  // K2 + K1
    CHECK(bc.n == 3);
    CHECK(bc.m == 1);
    CHECK(bc.k == 2);
    CHECK(bc.c == 1);
    CHECK(bc.i == 1);

    bc = basic_counts(engine().ccp(make_edgeless(4)));
    CHECK(bc.n == 4);
    CHECK(bc.m == 0);
    CHECK(bc.k == 4);
    CHECK(bc.c == 0);
    CHECK(bc.i == 4);

    CHECK_THROWS_AS(basic_counts(TriPoly::zero()), MalformedPolynomialError);
}

TEST_CASE("girth extraction") {
    auto g = girth_info(engine().ccp(make_cycle(3)), 3);
    REQUIRE(g.has_value());
    CHECK(g->first == 3);
    CHECK(g->second == 1);

    g = girth_info(engine().ccp(make_cycle(1)), 1);
    REQUIRE(g.has_value());
    CHECK(g->first == 1);
    CHECK(g->second == 1);

    CHECK(!girth_info(engine().ccp(make_path(4)), 4).has_value());

    g = girth_info(engine().ccp(make_cycle(4)), 4);
    REQUIRE(g.has_value());
    CHECK(g->first == 4);
    CHECK(g->second == 1);
}

TEST_CASE("degree extraction fixtures") {
    const TriPoly p3 = engine().ccp(make_path(3));
    CHECK(degree_one_count(p3, basic_counts(p3)) == 2);

    const TriPoly k2 = engine().ccp(make_complete(2));
    CHECK(degree_one_count(k2, basic_counts(k2)) == 2);

    const TriPoly c4 = engine().ccp(make_cycle(4));
    auto d = min_degree_info(c4, basic_counts(c4));
    REQUIRE(d.has_value());
    CHECK(d->first == 2);
    CHECK(d->second == 4);
}

TEST_CASE("edge-induced subgraph counts and cliques") {
    const TriPoly k3 = engine().ccp(make_complete(3));
    CHECK(edge_induced_subgraph_count(k3, 3, 3, 3, 1) == 1);
    CHECK(clique_number_from_poly(k3, 3) == 3);

    const TriPoly s3 = engine().ccp(make_star(3));
    auto [p3_count, m1] = p3_and_m1(s3, 4, 3);
    CHECK(p3_count == 3);
    CHECK(m1 == 12);

    const TriPoly p4 = engine().ccp(make_path(4));
    auto [p3b, m1b] = p3_and_m1(p4, 4, 3);
    CHECK(p3b == 2);
    CHECK(m1b == 10);
}

TEST_CASE("tree-inducing subset counts match enumeration") {
    std::mt19937_64 rng(301);
    covpoly::testing::RandomGraphOptions opt{
        .max_n = 6, .max_m = 9, .allow_loops = false, .allow_parallel = false};
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng, opt);
        const TriPoly c = engine().ccp(g);
        for (int n2 = 1; n2 <= g.vertex_count(); ++n2) {
            // count edge subsets inducing a tree on n2 vertices directly
            long expected = 0;
            const int m = g.edge_count();
            std::vector<int> picked;
            auto rec = [&](auto&& self, int from) -> void {
                if (static_cast<int>(picked.size()) == n2 - 1) {
                    std::vector<int> verts;
                    for (int i : picked) {
                        verts.push_back(g.edge(i)[0]);
                        verts.push_back(g.edge(i)[1]);
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    if (static_cast<int>(verts.size()) != n2) return;
                    Multigraph sub = g.induced(verts);
                    if (component_stats(sub).components == 1 && sub.edge_count() >= n2 - 1) {
                        // recount: the induced graph may have extra edges; check the picked set only
                        std::vector<Multigraph::Edge> es;
                        std::vector<int> pos(g.vertex_count(), -1);
                        for (std::size_t idx = 0; idx < verts.size(); ++idx)
                            pos[verts[idx]] = static_cast<int>(idx);
                        for (int i : picked) es.push_back({pos[g.edge(i)[0]], pos[g.edge(i)[1]]});
                        if (component_stats(Multigraph(n2, es)).components == 1) ++expected;
                    }
                    return;
                }
                for (int i = from; i < m; ++i) {
                    picked.push_back(i);
                    self(self, i + 1);
                    picked.pop_back();
                }
            };
            if (n2 >= 1) rec(rec, 0);
            CHECK(edge_induced_subgraph_count(c, g.vertex_count(), n2, n2 - 1, 1) == expected);
        }
    }
}

TEST_CASE("polynomial extractions match graph-side oracles on all simple graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : covpoly::testing::simple_graph_classes(n)) {
            const TriPoly c = engine().ccp(g);
            const auto rep = extract_invariants(c);
            const auto st = component_stats(g);
            CHECK(rep.n == n);
            CHECK(rep.m == g.edge_count());
            CHECK(rep.k == st.components);
            CHECK(rep.c == st.covered);
            CHECK(rep.i == st.isolated);
            CHECK(rep.simple);

            const auto girth = girth_direct(g);
            CHECK(girth.has_value() == rep.girth.has_value());
            if (girth) {
                CHECK(girth->first == *rep.girth);
                CHECK(girth->second == *rep.girth_count);
            }

            const auto hist = degree_histogram(g);
            const long expected_deg1 = hist.count(1) ? hist.at(1) : 0;
            CHECK(*rep.deg1_count == expected_deg1);
            if (n > 0) {
                const int delta = hist.begin()->first;
                REQUIRE(rep.min_degree.has_value());
                CHECK(*rep.min_degree == delta);
                CHECK(*rep.min_degree_count == hist.begin()->second);
            }
            CHECK(*rep.clique_number == *clique_number_direct(g));
            CHECK(*rep.p3_count == p3_count_direct(g));
            CHECK(*rep.m1_index == m1_index_direct(g));
        }
    }
}

TEST_CASE("multigraph extractions match oracles") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 400; ++trial) {
        Multigraph g = covpoly::testing::random_multigraph(rng, {.max_n = 6, .max_m = 9});
        const TriPoly c = engine().ccp(g);
        const auto rep = extract_invariants(c);
        const auto st = component_stats(g);
        CHECK(rep.n == g.vertex_count());
        CHECK(rep.m == g.edge_count());
        CHECK(rep.k == st.components);
        CHECK(rep.c == st.covered);
        CHECK(rep.i == st.isolated);
        CHECK(rep.simple == g.simple());
        const auto girth = girth_direct(g);
        CHECK(girth.has_value() == rep.girth.has_value());
        if (girth) {
            CHECK(girth->first == *rep.girth);
            CHECK(girth->second == *rep.girth_count);
        }
    }
}

TEST_CASE("report json shape") {
    const auto rep = extract_invariants(engine().ccp(make_cycle(4)));
    const auto j = rep.to_json();
    CHECK(j["n"] == 4);
    CHECK(j["girth"] == 4);
    CHECK(j["girth_count"] == "1");
    CHECK(j["simple"] == true);
    CHECK(j["min_degree"] == 2);
    CHECK(j["min_degree_count"] == "4");
    CHECK(j["clique_number"] == 2);
    // fixed field order
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "m", "k", "c", "i", "girth", "girth_count", "simple",
                                           "min_degree", "min_degree_count", "deg1_count",
                                           "clique_number", "p3_count", "m1_index"});

    const auto multigraph_rep = extract_invariants(engine().ccp(make_cycle(2)));
    CHECK(multigraph_rep.to_json()["clique_number"].is_null());
    CHECK(multigraph_rep.to_json()["girth"] == 2);
}
