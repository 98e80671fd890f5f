#include "covpoly/engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace covpoly {

namespace {

TriPoly x_power(int n) { return TriPoly::monomial({n, 0, 0}); }

// xyz - xy, the extraction weight of the general recurrence
const TriPoly& extraction_weight() {
    static const TriPoly w = TriPoly::monomial({1, 1, 1}) - TriPoly::monomial({1, 1, 0});
    return w;
}

const TriPoly& x_plus_y() {
    static const TriPoly p = TriPoly::monomial({1, 0, 0}) + TriPoly::monomial({0, 1, 0});
    return p;
}

const TriPoly& y_mono() {
    static const TriPoly p = TriPoly::monomial({0, 1, 0});
    return p;
}

const TriPoly& z_mono() {
    static const TriPoly p = TriPoly::monomial({0, 0, 1});
    return p;
}

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int first_pendant_edge(const Multigraph& g) {
    const auto deg = g.degrees();
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e[0] != e[1] && (deg[e[0]] == 1 || deg[e[1]] == 1)) return i;
    }
    return -1;
}

struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

template <class G>
TriPoly bruteforce_impl(const G& g, int edge_cap) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > edge_cap)
        throw CapExceededError("brute force edge cap exceeded: m=" + std::to_string(m) + " > " +
                               std::to_string(edge_cap));
    std::map<std::array<int, 3>, long> counts;
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        Dsu dsu(n);
        std::vector<char> touched(n, 0);
        int edges_used = 0;
        for (int i = 0; i < m; ++i) {
            if (!(subset & (1u << i))) continue;
            ++edges_used;
            const auto& e = g.edge(i);
            int first = e[0];
            for (int v : e) {
                touched[v] = 1;
                dsu.unite(first, v);
            }
        }
        std::vector<char> seen(n, 0), covered(n, 0);
        for (int v = 0; v < n; ++v)
            if (touched[v]) covered[dsu.find(v)] = 1;
        int k = 0, c = 0;
        for (int v = 0; v < n; ++v) {
            int r = dsu.find(v);
            if (!seen[r]) {
                seen[r] = 1;
                ++k;
                if (covered[r]) ++c;
            }
        }
        ++counts[{k, edges_used, c}];
    }
    TriPoly out;
    for (const auto& [e, cnt] : counts) out.add_term(e, mpz_class(cnt));
    return out;
}

std::vector<std::vector<int>> component_groups(const ComponentStats& st) {
    std::vector<std::vector<int>> groups(st.components);
    for (int v = 0; v < static_cast<int>(st.labels.size()); ++v) groups[st.labels[v]].push_back(v);
    return groups;
}

}  // namespace

CoefficientTable CoefficientTable::from_poly(const TriPoly& c, int n, int m) {
    CoefficientTable t;
    t.n = n;
    t.m = m;
    for (const auto& [e, v] : c.terms()) t.entries.emplace(e, v);
    return t;
}

TriPoly CoefficientTable::to_poly() const {
    TriPoly p;
    for (const auto& [e, v] : entries) p.add_term(e, v);
    return p;
}

void CoefficientTable::validate() const {
    mpz_class total = 0;
    for (const auto& [e, v] : entries) {
        const auto [i, j, k] = std::tuple(e[0], e[1], e[2]);
        if (v < 0) throw MalformedPolynomialError("negative subset count");
        if (k > j || k > i || i > n || i < n - j || j > m)
            throw MalformedPolynomialError("coefficient table entry out of bounds");
        total += v;
    }
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(m));
    if (total != expected) throw MalformedPolynomialError("coefficient table does not sum to 2^m");
    auto it = entries.find({n, 0, 0});
    if (it == entries.end() || it->second != 1)
        throw MalformedPolynomialError("missing empty-subset entry");
}

CcpEngine::CcpEngine(EngineConfig cfg) : cfg_(cfg), rng_(cfg.selection_seed) {}

void CcpEngine::clear_cache() {
    ccp_cache_.clear();
    eep_cache_.clear();
}

void CcpEngine::guard_cache() {
    if (ccp_cache_.size() + eep_cache_.size() >= cfg_.cache_entry_limit) clear_cache();
}

int CcpEngine::select_edge(const Multigraph& g) {
    if (cfg_.edge_selection == EngineConfig::EdgeSelection::UniformRandom) {
        std::uniform_int_distribution<int> dist(0, g.edge_count() - 1);
        return dist(rng_);
    }
    const auto deg = g.degrees();
    int best = 0, best_sum = -1;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        int sum = deg[e[0]] + deg[e[1]];
        if (sum > best_sum) {
            best_sum = sum;
            best = i;
        }
    }
    return best;
}

int CcpEngine::select_edge(const Hypergraph& g) {
    if (cfg_.edge_selection == EngineConfig::EdgeSelection::UniformRandom) {
        std::uniform_int_distribution<int> dist(0, g.edge_count() - 1);
        return dist(rng_);
    }
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& e : g.edges())
        for (int v : e) ++deg[v];
    int best = 0, best_sum = -1;
    for (int i = 0; i < g.edge_count(); ++i) {
        int sum = 0;
        for (int v : g.edge(i)) sum += deg[v];
        if (sum > best_sum) {
            best_sum = sum;
            best = i;
        }
    }
    return best;
}

TriPoly CcpEngine::ccp(const Multigraph& g) { return ccp_multigraph(g); }
TriPoly CcpEngine::ccp(const Hypergraph& g) { return ccp_hypergraph(g); }
TriPoly CcpEngine::eep(const Multigraph& g) { return eep_multigraph(g); }

CoefficientTable CcpEngine::coefficient_table(const Multigraph& g) {
    return CoefficientTable::from_poly(ccp(g), g.vertex_count(), g.edge_count());
}

CoefficientTable CcpEngine::coefficient_table(const Hypergraph& g) {
    return CoefficientTable::from_poly(ccp(g), g.vertex_count(), g.edge_count());
}

TriPoly CcpEngine::ccp_multigraph(const Multigraph& g) {
    if (g.edge_count() == 0) return x_power(g.vertex_count());

    std::string key;
    if (canonical_key_available(g, cfg_.canonical_cache_cap)) {
        key = canonical_key(g, cfg_.canonical_cache_cap);
        auto it = ccp_cache_.find(key);
        if (it != ccp_cache_.end()) return it->second;
    }

    TriPoly result;
    const auto st = component_stats(g);
    if (cfg_.split_components && st.components > 1) {
        // isolated vertices are factors of x; covered components multiply
        result = x_power(st.isolated);
        for (auto& group : component_groups(st)) {
            Multigraph sub = g.induced(group);
            if (sub.edge_count() == 0) continue;
            result *= ccp_multigraph(sub);
        }
    } else {
        int pendant = cfg_.use_pendant_rule ? first_pendant_edge(g) : -1;
        if (pendant >= 0) {
            result = x_plus_y() * ccp_multigraph(g.contract_edge(pendant)) +
                     extraction_weight() * ccp_multigraph(g.extract_edge(pendant));
        } else if (try_structured_reduction(g, result)) {
            // handled via the bridge or articulation identity
        } else {
            const int e = select_edge(g);
            result = ccp_multigraph(g.delete_edge(e)) + y_mono() * ccp_multigraph(g.contract_edge(e)) +
                     extraction_weight() * ccp_multigraph(g.extract_edge(e));
        }
    }

    if (!key.empty()) {
        guard_cache();
        ccp_cache_.emplace(std::move(key), result);
    }
    return result;
}

bool CcpEngine::try_structured_reduction(const Multigraph& g, TriPoly& out) {
    if (!cfg_.use_bridge_rule && !cfg_.use_articulation_rule) return false;
    const int k = component_stats(g).components;

    if (cfg_.use_bridge_rule) {
        for (int i = 0; i < g.edge_count(); ++i) {
            if (g.is_loop(i)) continue;
            if (component_stats(g.delete_edge(i)).components <= k) continue;
            const auto& e = g.edge(i);
            out = bridge_reduction(ccp_multigraph(g.delete_edge(i)),
                                   ccp_multigraph(g.delete_vertex(e[0])),
                                   ccp_multigraph(g.delete_vertex(e[1])),
                                   ccp_multigraph(g.extract_edge(i)));
            return true;
        }
    }

    if (cfg_.use_articulation_rule) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const Multigraph without = g.delete_vertex(v);
            const auto stv = component_stats(without);
            if (stv.components <= k) continue;
            // side 1 = component 0 of G-v plus v, side 2 = the rest plus v
            auto label_of = [&](int u) { return stv.labels[u < v ? u : u - 1]; };
            std::vector<int> keep1, keep2;
            std::vector<int> side(g.vertex_count(), 2);
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (u == v) continue;
                side[u] = label_of(u) == 0 ? 1 : 2;
                (side[u] == 1 ? keep1 : keep2).push_back(u);
            }
            keep1.push_back(v);
            keep2.push_back(v);
            std::sort(keep1.begin(), keep1.end());
            std::sort(keep2.begin(), keep2.end());
            std::vector<int> pos1(g.vertex_count(), -1), pos2(g.vertex_count(), -1);
            for (std::size_t i = 0; i < keep1.size(); ++i) pos1[keep1[i]] = static_cast<int>(i);
            for (std::size_t i = 0; i < keep2.size(); ++i) pos2[keep2[i]] = static_cast<int>(i);
            std::vector<Multigraph::Edge> edges1, edges2;
            for (const auto& e : g.edges()) {
                const int u = e[0] == v ? e[1] : e[0];
                if (u == v || side[u] == 1)  // v-loops go to side 1
                    edges1.push_back({pos1[e[0]], pos1[e[1]]});
                else
                    edges2.push_back({pos2[e[0]], pos2[e[1]]});
            }
            Multigraph g1(static_cast<int>(keep1.size()), std::move(edges1));
            Multigraph g2(static_cast<int>(keep2.size()), std::move(edges2));
            out = articulation_join(ccp_multigraph(g1), ccp_multigraph(g1.delete_vertex(pos1[v])),
                                    ccp_multigraph(g2), ccp_multigraph(g2.delete_vertex(pos2[v])));
            return true;
        }
    }
    return false;
}

TriPoly CcpEngine::ccp_hypergraph(const Hypergraph& g) {
    if (g.max_arity() <= 2) return ccp_multigraph(g.to_multigraph());
    if (g.edge_count() == 0) return x_power(g.vertex_count());

    const auto st = component_stats(g);
    if (cfg_.split_components && st.components > 1) {
        TriPoly result = x_power(st.isolated);
        for (auto& group : component_groups(st)) {
            Hypergraph sub = g.induced(group);
            if (sub.edge_count() == 0) continue;
            result *= ccp_hypergraph(sub);
        }
        return result;
    }
    const int e = select_edge(g);
    return ccp_hypergraph(g.delete_edge(e)) + y_mono() * ccp_hypergraph(g.contract_edge(e)) +
           extraction_weight() * ccp_hypergraph(g.extract_edge(e));
}

TriPoly CcpEngine::eep_multigraph(const Multigraph& g) {
    if (g.edge_count() == 0) return x_power(g.vertex_count());

    std::string key;
    if (canonical_key_available(g, cfg_.canonical_cache_cap)) {
        key = canonical_key(g, cfg_.canonical_cache_cap);
        auto it = eep_cache_.find(key);
        if (it != eep_cache_.end()) return it->second;
    }

    TriPoly result;
    const auto st = component_stats(g);
    if (cfg_.split_components && st.components > 1) {
        result = x_power(st.isolated);
        for (auto& group : component_groups(st)) {
            Multigraph sub = g.induced(group);
            if (sub.edge_count() == 0) continue;
            result *= eep_multigraph(sub);
        }
    } else {
        int pendant = cfg_.use_pendant_rule ? first_pendant_edge(g) : -1;
        if (pendant >= 0) {
            result = x_plus_y() * eep_multigraph(g.contract_edge(pendant)) +
                     z_mono() * eep_multigraph(g.extract_edge(pendant));
        } else {
            const int e = select_edge(g);
            result = eep_multigraph(g.delete_edge(e)) + y_mono() * eep_multigraph(g.contract_edge(e)) +
                     z_mono() * eep_multigraph(g.extract_edge(e));
        }
    }

    if (!key.empty()) {
        guard_cache();
        eep_cache_.emplace(std::move(key), result);
    }
    return result;
}

TriPoly ccp_bruteforce(const Multigraph& g, int edge_cap) { return bruteforce_impl(g, edge_cap); }
TriPoly ccp_bruteforce(const Hypergraph& g, int edge_cap) { return bruteforce_impl(g, edge_cap); }

TriPoly eep_subset_expansion(const Multigraph& g, int edge_cap) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > edge_cap)
        throw CapExceededError("subset-pair expansion cap exceeded: m=" + std::to_string(m));
    if (n > 62) throw CapExceededError("subset-pair expansion supports n <= 62");

    std::vector<std::uint64_t> edge_mask(m, 0);
    for (int i = 0; i < m; ++i) {
        edge_mask[i] |= 1ull << g.edge(i)[0];
        edge_mask[i] |= 1ull << g.edge(i)[1];
    }

    std::map<std::array<int, 3>, long> counts;
    std::vector<int> in_a, in_b;

    auto leaf = [&]() {
        Dsu both(n), only_b(n);
        std::vector<char> touched_b(n, 0);
        for (int i : in_a) both.unite(g.edge(i)[0], g.edge(i)[1]);
        for (int i : in_b) {
            both.unite(g.edge(i)[0], g.edge(i)[1]);
            only_b.unite(g.edge(i)[0], g.edge(i)[1]);
            touched_b[g.edge(i)[0]] = 1;
            touched_b[g.edge(i)[1]] = 1;
        }
        int k = 0;
        {
            std::vector<char> seen(n, 0);
            for (int v = 0; v < n; ++v) {
                int r = both.find(v);
                if (!seen[r]) {
                    seen[r] = 1;
                    ++k;
                }
            }
        }
        int cb = 0;
        {
            std::vector<char> seen(n, 0), covered(n, 0);
            for (int v = 0; v < n; ++v)
                if (touched_b[v]) covered[only_b.find(v)] = 1;
            for (int v = 0; v < n; ++v) {
                int r = only_b.find(v);
                if (!seen[r]) {
                    seen[r] = 1;
                    if (covered[r]) ++cb;
                }
            }
        }
        const int a_sz = static_cast<int>(in_a.size());
        const int b_sz = static_cast<int>(in_b.size());
        ++counts[{k - cb, a_sz + b_sz - cb, cb}];
    };

    // three-way branching: each edge goes to A, to B, or is skipped; the
    // vertex sets of A and B must stay disjoint
    auto dfs = [&](auto&& self, int idx, std::uint64_t mask_a, std::uint64_t mask_b) -> void {
        if (idx == m) {
            leaf();
            return;
        }
        self(self, idx + 1, mask_a, mask_b);
        if (!(edge_mask[idx] & mask_b)) {
            in_a.push_back(idx);
            self(self, idx + 1, mask_a | edge_mask[idx], mask_b);
            in_a.pop_back();
        }
        if (!(edge_mask[idx] & mask_a)) {
            in_b.push_back(idx);
            self(self, idx + 1, mask_a, mask_b | edge_mask[idx]);
            in_b.pop_back();
        }
    };
    dfs(dfs, 0, 0, 0);

    TriPoly out;
    for (const auto& [e, cnt] : counts) out.add_term(e, mpz_class(cnt));
    return out;
}

// Case split on whether the shared vertex is covered or isolated on each
// side. Covered-covered double counts its merged component (divide by xz);
// covered-isolated pairs the covered side with the isolated-v subgraphs
// x*C(G-v) of the other side; isolated-isolated double counts a lone vertex.
// The resulting bilinear form is
//   (1/(xz)) C1 C2 + (1 - 1/z) [C1 C2v + C1v C2] + (x/z - x) C1v C2v.
TriPoly articulation_join(const TriPoly& c1, const TriPoly& c1_minus_v, const TriPoly& c2,
                          const TriPoly& c2_minus_v) {
    auto mono = [](int ex, int ey, int ez, long coef) {
        return TriPoly::monomial({ex, ey, ez}, coef, true);
    };
    const TriPoly a = mono(-1, 0, -1, 1);
    const TriPoly b = mono(0, 0, 0, 1) + mono(0, 0, -1, -1);
    const TriPoly d = mono(1, 0, -1, 1) + mono(1, 0, 0, -1);
    TriPoly result = a * c1 * c2 + b * (c1 * c2_minus_v + c1_minus_v * c2) + d * c1_minus_v * c2_minus_v;
    return result.checked_nonneg();
}

// The articulation identity applied to G/e for a bridge e = {v1,v2}:
//   (1 + y/(xz)) C(G-e) + (y - y/z) [C(G-v1) + C(G-v2)]
//   + (xy/z + xyz - 2xy) C(G extract e).
TriPoly bridge_reduction(const TriPoly& c_minus_e, const TriPoly& c_minus_v1,
                         const TriPoly& c_minus_v2, const TriPoly& c_extract) {
    auto mono = [](int ex, int ey, int ez, long coef) {
        return TriPoly::monomial({ex, ey, ez}, coef, true);
    };
    const TriPoly a = mono(0, 0, 0, 1) + mono(-1, 1, -1, 1);
    const TriPoly b = mono(0, 1, 0, 1) + mono(0, 1, -1, -1);
    const TriPoly d = mono(1, 1, -1, 1) + mono(1, 1, 1, 1) + mono(1, 1, 0, -2);
    TriPoly result = a * c_minus_e + b * (c_minus_v1 + c_minus_v2) + d * c_extract;
    return result.checked_nonneg();
}

mpz_class path_subgraph_count(int n, int i, int k) {
    if (n > 0 && i > 0 && k > 0) {
        if (i > n - 1) return 0;
        return binom(i - 1, k - 1) * binom(n - i, k);
    }
    return (i == 0 && k == 0) ? 1 : 0;
}

mpz_class connected_graph_count(int i, int j) {
    if (i <= 0 || j < 0) return 0;
    static std::map<std::pair<int, int>, mpz_class> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
    }
    mpz_class total = binom(static_cast<long>(i) * (i - 1) / 2, j);
    for (int k = 1; k < i; ++k) {
        const mpz_class choose_rest = binom(i - 1, k - 1);
        if (choose_rest == 0) continue;
        for (int l = 0; l <= j; ++l) {
            mpz_class d = connected_graph_count(k, l);
            if (d == 0) continue;
            total -= d * choose_rest * binom(static_cast<long>(i - k) * (i - k - 1) / 2, j - l);
        }
    }
    std::lock_guard lock(memo_mutex);
    return memo.emplace(std::pair(i, j), std::move(total)).first->second;
}

mpz_class cycle_matching_count(int n, int k) {
    if (k <= 0 || k >= n) throw InvalidSizeError("cycle matching count needs 0 < k < n");
    mpz_class t = mpz_class(n) * binom(n - k, k);
    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(n - k)))
        throw Error("cycle matching count not divisible; invalid parameters");
    return t / (n - k);
}

TriPoly family_ccp(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::Path: {
            if (n < 0) throw InvalidSizeError("path size must be >= 0");
            TriPoly out = x_power(n);
            for (int i = 1; i <= n - 1; ++i)
                for (int k = 1; k <= std::min(i, n - i); ++k)
                    out.add_term({n - i, i, k}, path_subgraph_count(n, i, k));
            return out;
        }
        case FamilyKind::Cycle: {
            if (n < 1) throw InvalidSizeError("cycle size must be >= 1");
            TriPoly out = x_power(n);
            for (int i = 1; i <= n - 1; ++i) {
                for (int k = 1; k <= std::min(i, n - i); ++k) {
                    mpz_class t = mpz_class(n) * path_subgraph_count(n, i, k);
                    if (t == 0) continue;
                    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(n - i)))
                        throw Error("cycle coefficient not divisible");
                    out.add_term({n - i, i, k}, t / (n - i));
                }
            }
            out.add_term({1, n, 1}, 1);
            return out;
        }
        case FamilyKind::Star: {
            if (n < 0) throw InvalidSizeError("star size must be >= 0");
            // x^{n+1}(1-z) + x z (x+y)^n
            TriPoly out = x_power(n + 1);
            out.add_term({n + 1, 0, 1}, -1);
            out += TriPoly::monomial({1, 0, 1}) * x_plus_y().pow(static_cast<unsigned>(n));
            return out;
        }
        case FamilyKind::Complete: {
            if (n < 0) throw InvalidSizeError("complete-graph size must be >= 0");
            std::vector<TriPoly> table;
            table.push_back(TriPoly::constant(1));  // K_0
            if (n >= 1) table.push_back(x_power(1));
            for (int v = 2; v <= n; ++v) {
                TriPoly next = x_power(1) * table[v - 1];
                for (int i = 2; i <= v; ++i) {
                    const mpz_class choose = binom(v - 1, i - 1);
                    TriPoly inner;
                    for (int j = i - 1; j <= i * (i - 1) / 2; ++j) {
                        mpz_class d = connected_graph_count(i, j);
                        if (d != 0) inner.add_term({1, j, 1}, d * choose);
                    }
                    next += inner * table[v - i];
                }
                table.push_back(std::move(next));
            }
            return table[n];
        }
        default:
            throw InvalidSizeError("no closed form for this family");
    }
}

}  // namespace covpoly
