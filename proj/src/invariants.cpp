#include "covpoly/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace covpoly {

BasicCounts basic_counts(const TriPoly& cp) {
    if (cp.is_zero()) throw MalformedPolynomialError("zero polynomial is not a covered components polynomial");
    BasicCounts bc;
    bc.n = cp.degree(0).value();
    bc.m = cp.degree(1).value();
    const TriPoly slice = cp.coefficient_slice(1, bc.m);
    if (slice.is_zero()) throw MalformedPolynomialError("empty y^m slice");
    bc.k = slice.degree(0).value();
    bc.c = slice.degree(2).value();
    bc.i = bc.k - bc.c;
    return bc;
}

std::optional<std::pair<int, mpz_class>> girth_info(const TriPoly& cp, int n) {
    const int m = cp.degree(1).value_or(0);
    for (int j = 1; j <= m; ++j) {
        mpz_class c = cp.coeff({n - j + 1, j, 1});
        if (c > 0) return std::pair(j, c);
    }
    return std::nullopt;
}

bool poly_is_simple(const TriPoly& cp, int n) {
    const auto g = girth_info(cp, n);
    return !g || g->first > 2;
}

std::optional<std::pair<int, mpz_class>> min_degree_info(const TriPoly& cp, const BasicCounts& bc) {
    for (int j = 0; j <= bc.m; ++j) {
        const TriPoly slice = cp.coefficient_slice(1, bc.m - j);
        mpz_class count = 0;
        for (const auto& [e, c] : slice.terms())
            if (e[0] > e[2]) count += c;
        if (count > 0) {
            if (j == 0) return std::pair(0, mpz_class(bc.i));
            if (j == 1) return std::pair(1, degree_one_count(cp, bc));
            return std::pair(j, count);
        }
    }
    return std::nullopt;  // no vertices at all
}

mpz_class degree_one_count(const TriPoly& cp, const BasicCounts& bc) {
    if (bc.m == 0) return 0;
    return cp.coeff({bc.k + 1, bc.m - 1, bc.c}) + 2 * cp.coeff({bc.k + 1, bc.m - 1, bc.c - 1});
}

mpz_class edge_induced_subgraph_count(const TriPoly& cp, int n, int n2, int m2, int k2) {
    return cp.coeff({n - n2 + k2, m2, k2});
}

std::optional<int> clique_number_from_poly(const TriPoly& cp, int n) {
    for (int j = n; j >= 2; --j)
        if (edge_induced_subgraph_count(cp, n, j, j * (j - 1) / 2, 1) > 0) return j;
    return n >= 1 ? std::optional<int>(1) : std::optional<int>(0);
}

std::pair<mpz_class, mpz_class> p3_and_m1(const TriPoly& cp, int n, int m) {
    mpz_class p3 = edge_induced_subgraph_count(cp, n, 3, 2, 1);
    return {p3, 2 * p3 + 2 * m};
}

InvariantReport extract_invariants(const TriPoly& cp) {
    InvariantReport rep;
    const BasicCounts bc = basic_counts(cp);
    rep.n = bc.n;
    rep.m = bc.m;
    rep.k = bc.k;
    rep.c = bc.c;
    rep.i = bc.i;
    if (auto g = girth_info(cp, bc.n)) {
        rep.girth = g->first;
        rep.girth_count = g->second;
    }
    rep.simple = !rep.girth || *rep.girth > 2;
    if (rep.simple) {
        if (auto d = min_degree_info(cp, bc)) {
            rep.min_degree = d->first;
            rep.min_degree_count = d->second;
        }
        rep.deg1_count = degree_one_count(cp, bc);
        rep.clique_number = clique_number_from_poly(cp, bc.n);
        auto [p3, m1] = p3_and_m1(cp, bc.n, bc.m);
        rep.p3_count = p3;
        rep.m1_index = m1;
    }
    return rep;
}

nlohmann::ordered_json InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["k"] = k;
    j["c"] = c;
    j["i"] = i;
    j["girth"] = girth ? nlohmann::ordered_json(*girth) : nlohmann::ordered_json(nullptr);
    j["girth_count"] =
        girth_count ? nlohmann::ordered_json(girth_count->get_str()) : nlohmann::ordered_json(nullptr);
    j["simple"] = simple;
    j["min_degree"] = min_degree ? nlohmann::ordered_json(*min_degree) : nlohmann::ordered_json(nullptr);
    j["min_degree_count"] = min_degree_count ? nlohmann::ordered_json(min_degree_count->get_str())
                                             : nlohmann::ordered_json(nullptr);
    j["deg1_count"] =
        deg1_count ? nlohmann::ordered_json(deg1_count->get_str()) : nlohmann::ordered_json(nullptr);
    j["clique_number"] =
        clique_number ? nlohmann::ordered_json(*clique_number) : nlohmann::ordered_json(nullptr);
    j["p3_count"] = p3_count ? nlohmann::ordered_json(p3_count->get_str()) : nlohmann::ordered_json(nullptr);
    j["m1_index"] = m1_index ? nlohmann::ordered_json(m1_index->get_str()) : nlohmann::ordered_json(nullptr);
    return j;
}

namespace {

// whether the edge subset induces exactly one cycle covering all its vertices
bool induces_cycle(const Multigraph& g, const std::vector<int>& picked) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<int> verts;
    for (int idx : picked) {
        const auto& e = g.edge(idx);
        deg[e[0]] += 1;
        deg[e[1]] += 1;
        verts.push_back(e[0]);
        verts.push_back(e[1]);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != picked.size()) return false;  // j edges on j vertices
    for (int v : verts)
        if (deg[v] != 2) return false;
    // connectivity of the covered part
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int idx : picked) parent[find(g.edge(idx)[0])] = find(g.edge(idx)[1]);
    for (int v : verts)
        if (find(v) != find(verts[0])) return false;
    return true;
}

}  // namespace

std::optional<std::pair<int, long>> girth_direct(const Multigraph& g) {
    const int m = g.edge_count();
    for (int j = 1; j <= m; ++j) {
        long count = 0;
        std::vector<int> picked;
        auto choose = [&](auto&& self, int from) -> void {
            if (static_cast<int>(picked.size()) == j) {
                if (induces_cycle(g, picked)) ++count;
                return;
            }
            for (int i = from; i < m; ++i) {
                picked.push_back(i);
                self(self, i + 1);
                picked.pop_back();
            }
        };
        choose(choose, 0);
        if (count > 0) return std::pair(j, count);
    }
    return std::nullopt;
}

std::map<int, int> degree_histogram(const Multigraph& g) {
    std::map<int, int> hist;
    for (int d : g.degrees()) ++hist[d];
    return hist;
}

std::optional<int> clique_number_direct(const Multigraph& g) {
    if (!g.simple()) return std::nullopt;
    const int n = g.vertex_count();
    if (n > 20) throw CapExceededError("clique oracle supports n <= 20");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (subset & (1u << v)) verts.push_back(v);
        if (static_cast<int>(verts.size()) <= best) continue;
        bool complete = true;
        for (std::size_t a = 0; a < verts.size() && complete; ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (!adj[verts[a]][verts[b]]) {
                    complete = false;
                    break;
                }
        if (complete) best = static_cast<int>(verts.size());
    }
    return best;
}

long p3_count_direct(const Multigraph& g) {
    long total = 0;
    for (int d : g.degrees()) total += static_cast<long>(d) * (d - 1) / 2;
    return total;
}

long m1_index_direct(const Multigraph& g) {
    long total = 0;
    for (int d : g.degrees()) total += static_cast<long>(d) * d;
    return total;
}

}  // namespace covpoly
