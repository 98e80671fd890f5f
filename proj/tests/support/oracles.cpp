#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "covpoly/canonical.hpp"

namespace covpoly::testing {

bool brute_force_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    if (n > 9) throw CapExceededError("brute force isomorphism oracle supports n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto target = b.edges();
    do {
        std::vector<Multigraph::Edge> mapped;
        mapped.reserve(a.edge_count());
        for (const auto& e : a.edges()) {
            Multigraph::Edge f = {perm[e[0]], perm[e[1]]};
            if (f[0] > f[1]) std::swap(f[0], f[1]);
            mapped.push_back(f);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

long proper_coloring_count(const Multigraph& g, int q) {
    const int n = g.vertex_count();
    if (q == 0) return n == 0 ? 1 : 0;
    std::vector<int> phi(n, 0);
    long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : g.edges())
            if (phi[e[0]] == phi[e[1]]) {  // a loop always trips this
                ok = false;
                break;
            }
        if (ok) ++count;
        int pos = 0;
        while (pos < n && ++phi[pos] == q) phi[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

namespace {

bool subset_is_independent(const Multigraph& g, std::uint32_t subset) {
    for (const auto& e : g.edges()) {
        const bool u = subset & (1u << e[0]);
        const bool v = subset & (1u << e[1]);
        if (u && v) return false;  // a loop vertex can never be picked
    }
    return true;
}

bool subset_is_cover(const Multigraph& g, std::uint32_t subset) {
    for (const auto& e : g.edges())
        if (!(subset & (1u << e[0])) && !(subset & (1u << e[1]))) return false;
    return true;
}

}  // namespace

std::map<int, long> independent_sets_by_size(const Multigraph& g) {
    std::map<int, long> out;
    for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
        if (subset_is_independent(g, s)) ++out[std::popcount(s)];
    return out;
}

std::map<int, long> vertex_covers_by_size(const Multigraph& g) {
    std::map<int, long> out;
    for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
        if (subset_is_cover(g, s)) ++out[std::popcount(s)];
    return out;
}

std::map<int, long> matchings_by_size(const Multigraph& g) {
    std::map<int, long> out;
    const int m = g.edge_count();
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        std::uint64_t verts = 0;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s & (1u << i))) continue;
            const auto& e = g.edge(i);
            if (e[0] == e[1]) {
                ok = false;
                break;
            }
            const std::uint64_t mask = (1ull << e[0]) | (1ull << e[1]);
            if (verts & mask) ok = false;
            verts |= mask;
            ++size;
        }
        if (ok) ++out[size];
    }
    return out;
}

long labeled_connected_count(int i, int j) {
    if (i <= 0) return 0;
    if (i > 5) throw CapExceededError("labeled connected oracle supports i <= 5");
    std::vector<Multigraph::Edge> slots;
    for (int u = 0; u < i; ++u)
        for (int v = u + 1; v < i; ++v) slots.push_back({u, v});
    const int t = static_cast<int>(slots.size());
    long count = 0;
    for (std::uint32_t s = 0; s < (1u << t); ++s) {
        if (std::popcount(s) != j) continue;
        std::vector<Multigraph::Edge> edges;
        for (int b = 0; b < t; ++b)
            if (s & (1u << b)) edges.push_back(slots[b]);
        if (component_stats(Multigraph(i, edges)).components == 1) ++count;
    }
    return count;
}

std::vector<std::string> prufer_tree_keys(int n) {
    if (n > 8) throw CapExceededError("prufer oracle supports n <= 8");
    std::set<std::string> keys;
    if (n == 1) {
        keys.insert(canonical_key(make_path(1)));
    } else if (n == 2) {
        keys.insert(canonical_key(make_path(2)));
    } else {
        std::vector<int> seq(n - 2, 0);
        while (true) {
            // decode the sequence into a labeled tree
            std::vector<int> degree(n, 1);
            for (int v : seq) ++degree[v];
            std::vector<Multigraph::Edge> edges;
            std::set<int> leaves;
            for (int v = 0; v < n; ++v)
                if (degree[v] == 1) leaves.insert(v);
            std::vector<int> work = seq;
            for (int v : work) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.push_back({leaf, v});
                if (--degree[v] == 1) leaves.insert(v);
            }
            int a = *leaves.begin();
            int b = *std::next(leaves.begin());
            edges.push_back({a, b});
            keys.insert(canonical_key(Multigraph(n, edges)));

            int pos = 0;
            while (pos < n - 2 && ++seq[pos] == n) seq[pos++] = 0;
            if (pos == n - 2) break;
        }
    }
    return {keys.begin(), keys.end()};
}

void enumerate_multigraphs(int n, int m, const std::function<void(const Multigraph&)>& fn) {
    std::vector<Multigraph::Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) slots.push_back({u, v});
    std::vector<Multigraph::Edge> chosen;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            fn(Multigraph(n, chosen));
            return;
        }
        for (int i = from; i < static_cast<int>(slots.size()); ++i) {
            chosen.push_back(slots[i]);
            self(self, i, left - 1);  // multiset: the same slot may repeat
            chosen.pop_back();
        }
    };
    rec(rec, 0, m);
}

std::vector<Multigraph> simple_graph_classes(int n) {
    if (n > 6) throw CapExceededError("simple graph class oracle supports n <= 6");
    std::vector<Multigraph::Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    const int t = static_cast<int>(slots.size());
    std::map<std::string, Multigraph> classes;
    for (std::uint32_t s = 0; s < (1u << t); ++s) {
        std::vector<Multigraph::Edge> edges;
        for (int b = 0; b < t; ++b)
            if (s & (1u << b)) edges.push_back(slots[b]);
        Multigraph g(n, std::move(edges));
        classes.try_emplace(canonical_key(g), std::move(g));
    }
    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

Multigraph random_multigraph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
    std::uniform_int_distribution<int> nd(1, opt.max_n);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(0, opt.max_m);
    const int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<Multigraph::Edge> edges;
    std::set<Multigraph::Edge> used;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && attempts < 20 * (m + 1)) {
        ++attempts;
        int u = vd(rng), v = vd(rng);
        if (u > v) std::swap(u, v);
        if (u == v && !opt.allow_loops) continue;
        Multigraph::Edge e = {u, v};
        if (!opt.allow_parallel && used.count(e)) continue;
        used.insert(e);
        edges.push_back(e);
    }
    return Multigraph(n, std::move(edges));
}

Multigraph random_forest(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> nd(1, max_n);
    const int n = nd(rng);
    std::vector<Multigraph::Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v);  // v means "start a new component"
        int p = pd(rng);
        if (p < v) edges.push_back({p, v});
    }
    return Multigraph(n, std::move(edges));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_m, int max_arity) {
    std::uniform_int_distribution<int> nd(1, max_n);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(0, max_m);
    const int m = md(rng);
    std::uniform_int_distribution<int> ad(1, std::min(max_arity, n));
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<Hypergraph::Edge> edges;
    for (int i = 0; i < m; ++i) {
        const int arity = ad(rng);
        std::set<int> verts;
        while (static_cast<int>(verts.size()) < arity) verts.insert(vd(rng));
        edges.emplace_back(verts.begin(), verts.end());
    }
    return Hypergraph(n, std::move(edges));
}

TriPoly random_tripoly(std::mt19937_64& rng, int max_terms, int max_exp, int coeff_bound) {
    std::uniform_int_distribution<int> td(0, max_terms);
    std::uniform_int_distribution<int> ed(0, max_exp);
    std::uniform_int_distribution<int> cd(-coeff_bound, coeff_bound);
    TriPoly p;
    const int terms = td(rng);
    for (int t = 0; t < terms; ++t) p.add_term({ed(rng), ed(rng), ed(rng)}, cd(rng));
    return p;
}

}  // namespace covpoly::testing
