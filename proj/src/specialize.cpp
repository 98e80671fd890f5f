#include "covpoly/specialize.hpp"

#include <algorithm>
#include <unordered_map>

namespace covpoly {

namespace {

// successive powers of a fixed base, grown on demand
struct PowerCache {
    explicit PowerCache(TriPoly base) : base_(std::move(base)) { powers_.push_back(TriPoly::constant(1)); }
    const TriPoly& get(int k) {
        while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
        return powers_[k];
    }
    TriPoly base_;
    std::vector<TriPoly> powers_;
};

struct UniPowerCache {
    explicit UniPowerCache(UniPoly base) : base_(std::move(base)) { powers_.push_back(UniPoly::constant(1)); }
    const UniPoly& get(int k) {
        while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
        return powers_[k];
    }
    UniPoly base_;
    std::vector<UniPoly> powers_;
};

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class sign(int j) { return j % 2 == 0 ? 1 : -1; }

}  // namespace

TriPoly to_eep(const CoefficientTable& t) {
    PowerCache cov(TriPoly::monomial({0, 0, 1}) + TriPoly::monomial({1, 1, 0}));  // z + xy
    TriPoly out;
    for (const auto& [e, c] : t.entries) {
        const auto [i, j, k] = std::tuple(e[0], e[1], e[2]);
        out += TriPoly::monomial({i - k, j - k, 0}, c) * cov.get(k);
    }
    return out;
}

TriPoly from_eep(const TriPoly& xi) {
    const TriPoly repl = TriPoly::monomial({1, 1, 1}) - TriPoly::monomial({1, 1, 0});
    return xi.substitute(2, repl);
}

BiPoly potts(const TriPoly& c) { return c.evaluate_at(2, 1).project<2>({0, 1}); }

UniPoly chromatic(const TriPoly& c) {
    return c.evaluate_at(1, -1).evaluate_at(2, 1).project<1>({0});
}

BiPoly bivariate_chromatic(const CoefficientTable& t) {
    BiPoly out;
    for (const auto& [e, c] : t.entries)
        out.add_term({e[0] - e[2], e[2]}, sign(e[1]) * c);
    return out;
}

UniPoly vertex_cover(const CoefficientTable& t) {
    UniPowerCache xp1(UniPoly::monomial({1}) + UniPoly::constant(1));
    UniPoly out;
    for (const auto& [e, c] : t.entries) out += xp1.get(e[0] - e[2]) * (sign(e[1]) * c);
    return out;
}

UniPoly vertex_cover_recurrence(const Multigraph& g) {
    static const UniPoly x = UniPoly::monomial({1});
    static const UniPoly xp1 = x + UniPoly::constant(1);
    std::unordered_map<std::string, UniPoly> memo;

    auto rec = [&](auto&& self, const Multigraph& h) -> UniPoly {
        if (h.edge_count() == 0) return xp1.pow(static_cast<unsigned>(h.vertex_count()));
        std::string key;
        if (canonical_key_available(h)) {
            key = canonical_key(h);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        UniPoly result;
        const auto st = component_stats(h);
        if (st.components > 1) {
            result = xp1.pow(static_cast<unsigned>(st.isolated));
            std::vector<std::vector<int>> groups(st.components);
            for (int v = 0; v < h.vertex_count(); ++v) groups[st.labels[v]].push_back(v);
            for (const auto& grp : groups) {
                Multigraph sub = h.induced(grp);
                if (sub.edge_count() == 0) continue;
                result *= self(self, sub);
            }
        } else {
            const auto deg = h.degrees();
            int e = 0;
            for (int i = 0; i < h.edge_count(); ++i) {
                const auto& f = h.edge(i);
                if (f[0] != f[1] && (deg[f[0]] == 1 || deg[f[1]] == 1)) {
                    e = i;
                    break;
                }
            }
            result = self(self, h.delete_edge(e)) - self(self, h.contract_edge(e)) +
                     x * self(self, h.extract_edge(e));
        }
        if (!key.empty()) memo.emplace(std::move(key), result);
        return result;
    };
    return rec(rec, g);
}

UniPoly independence(const CoefficientTable& t) {
    UniPowerCache xp1(UniPoly::monomial({1}) + UniPoly::constant(1));
    UniPoly out;
    for (const auto& [e, c] : t.entries) {
        const int iso = e[0] - e[2];
        out += UniPoly::monomial({t.n - iso}, sign(e[1]) * c) * xp1.get(iso);
    }
    return out;
}

mpz_class independent_set_count(const CoefficientTable& t) {
    mpz_class total = 0, pw;
    for (const auto& [e, c] : t.entries) {
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(e[0] - e[2]));
        total += sign(e[1]) * c * pw;
    }
    return total;
}

BiPoly matching_poly(const CoefficientTable& t) {
    BiPoly out;
    for (int i = 0; 2 * i <= t.n; ++i) {
        auto it = t.entries.find({t.n - i, i, i});
        if (it != t.entries.end()) out.add_term({t.n - 2 * i, i}, it->second);
    }
    return out;
}

bool table_is_simple(const CoefficientTable& t) {
    for (int j = 1; j <= std::min(2, t.m); ++j) {
        auto it = t.entries.find({t.n - j + 1, j, 1});
        if (it != t.entries.end() && it->second > 0) return false;
    }
    return true;
}

UniPoly clique_poly(const CoefficientTable& t) {
    if (!table_is_simple(t)) throw NotSimpleError("clique polynomial requires a simple graph");
    UniPoly out = UniPoly::constant(1);
    out.add_term({1}, t.n);
    for (int i = 2; i <= t.n; ++i) {
        auto it = t.entries.find({t.n - i + 1, i * (i - 1) / 2, 1});
        if (it != t.entries.end()) out.add_term({i}, it->second);
    }
    return out;
}

BiPoly line_graph_subgraph_component(const TriPoly& c) {
    return c.evaluate_at(0, 1).project<2>({1, 2});
}

BiPoly subgraph_component_bruteforce(const Multigraph& h, int vertex_cap) {
    const int n = h.vertex_count();
    if (n > vertex_cap)
        throw CapExceededError("subgraph component brute force cap exceeded: n=" + std::to_string(n));
    BiPoly out;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (subset & (1u << v)) keep.push_back(v);
        const auto st = component_stats(h.induced(keep));
        out.add_term({static_cast<int>(keep.size()), st.components}, 1);
    }
    return out;
}

mpq_class no_isolated_probability(const CoefficientTable& t, const mpq_class& p) {
    const mpq_class q = 1 - p;
    mpq_class total = 0;
    for (const auto& [e, c] : t.entries) {
        if (e[0] != e[2]) continue;  // keep subsets with zero isolated vertices
        mpq_class term(c);
        for (int r = 0; r < e[1]; ++r) term *= p;
        for (int r = 0; r < t.m - e[1]; ++r) term *= q;
        total += term;
    }
    return total;
}

UniPoly no_isolated_probability_poly(const CoefficientTable& t) {
    UniPowerCache one_minus_p(UniPoly::constant(1) - UniPoly::monomial({1}));
    UniPoly out;
    for (const auto& [e, c] : t.entries) {
        if (e[0] != e[2]) continue;
        out += UniPoly::monomial({e[1]}, c) * one_minus_p.get(t.m - e[1]);
    }
    return out;
}

mpz_class hyper_chromatic_count(const Hypergraph& h, long colors, long low) {
    if (colors < low || low < 0) throw InvalidSizeError("need colors >= low >= 0");
    const int n = h.vertex_count();
    if (colors == 0) return n == 0 ? 1 : 0;
    double work = 1;
    for (int v = 0; v < n; ++v) work *= static_cast<double>(colors);
    if (work > 2e7) throw CapExceededError("too many colorings to enumerate");

    std::vector<int> phi(n, 0);
    mpz_class count = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : h.edges()) {
            const int c0 = phi[e[0]];
            bool mono = true;
            for (int v : e)
                if (phi[v] != c0) {
                    mono = false;
                    break;
                }
            if (mono && c0 < low) {  // colors are 1..x, stored 0-based
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < n && ++phi[pos] == colors) phi[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

BiPoly hyper_bivariate_chromatic(const Hypergraph& h) {
    static const BiPoly x = BiPoly::monomial({1, 0});
    static const BiPoly x_minus_y = BiPoly::monomial({1, 0}) - BiPoly::monomial({0, 1});
    if (h.edge_count() == 0) return x.pow(static_cast<unsigned>(h.vertex_count()));
    return hyper_bivariate_chromatic(h.delete_edge(0)) - hyper_bivariate_chromatic(h.contract_edge(0)) +
           x_minus_y * hyper_bivariate_chromatic(h.extract_edge(0));
}

BiPoly hyper_bivariate_chromatic_from_table(const CoefficientTable& t) {
    return bivariate_chromatic(t);
}

namespace {

// exact Lagrange interpolation through (xs[i], vals[i]); returns coefficients
std::vector<mpq_class> lagrange(const std::vector<long>& xs, const std::vector<mpq_class>& vals) {
    const std::size_t k = xs.size();
    std::vector<mpq_class> coeffs(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpq_class> basis = {1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            basis.push_back(0);
            for (std::size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - mpq_class(xs[j]) * basis[d];
            basis[0] = -mpq_class(xs[j]) * basis[0];
            denom *= mpq_class(xs[i]) - mpq_class(xs[j]);
        }
        const mpq_class scale = vals[i] / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * scale;
    }
    return coeffs;
}

}  // namespace

BiPoly hyper_bivariate_chromatic_interpolated(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int dx = n, dy = n;
    // per fixed low color bound y0, interpolate in x over x0 = y0..y0+dx
    std::vector<std::vector<mpq_class>> coeffs_by_y;
    for (long y0 = 0; y0 <= dy; ++y0) {
        std::vector<long> xs;
        std::vector<mpq_class> vals;
        for (long x0 = y0; x0 <= y0 + dx; ++x0) {
            xs.push_back(x0);
            vals.emplace_back(hyper_chromatic_count(h, x0, y0));
        }
        coeffs_by_y.push_back(lagrange(xs, vals));
    }
    BiPoly out;
    std::vector<long> ys;
    for (long y0 = 0; y0 <= dy; ++y0) ys.push_back(y0);
    for (int d = 0; d <= dx; ++d) {
        std::vector<mpq_class> vals;
        for (long y0 = 0; y0 <= dy; ++y0) vals.push_back(coeffs_by_y[y0][d]);
        const auto ycoeffs = lagrange(ys, vals);
        for (int e = 0; e <= dy; ++e) {
            if (ycoeffs[e] == 0) continue;
            if (ycoeffs[e].get_den() != 1)
                throw Error("interpolated chromatic polynomial has a non-integer coefficient");
            out.add_term({d, e}, ycoeffs[e].get_num());
        }
    }
    return out;
}

std::vector<std::string> specialization_names() {
    return {"eep",          "potts",    "chromatic", "bivariate_chromatic",
            "vertex_cover", "independence", "sigma",     "matching",
            "clique",       "line_subgraph_component", "reliability"};
}

std::vector<SpecializationResult> specialize(const Multigraph& g, const std::vector<std::string>& which,
                                             CcpEngine& engine, const std::optional<mpq_class>& p) {
    const TriPoly c = engine.ccp(g);
    const CoefficientTable table = CoefficientTable::from_poly(c, g.vertex_count(), g.edge_count());
    std::vector<SpecializationResult> out;
    for (const auto& name : which) {
        SpecializationResult r;
        r.name = name;
        if (name == "eep") {
            r.value = to_eep(table).to_json(kXYZ);
            r.provenance = "sum over table: x^(i-k) y^(j-k) (z+xy)^k";
        } else if (name == "potts") {
            r.value = potts(c).to_json(kXY);
            r.provenance = "C(G,x,y,1)";
        } else if (name == "chromatic") {
            r.value = chromatic(c).to_json(kX);
            r.provenance = "C(G,x,-1,1)";
        } else if (name == "bivariate_chromatic") {
            r.value = bivariate_chromatic(table).to_json(kXY);
            r.provenance = "sum over table: (-1)^j x^(i-k) y^k";
        } else if (name == "vertex_cover") {
            r.value = vertex_cover(table).to_json(kX);
            r.provenance = "sum over table: (-1)^j (x+1)^(i-k)";
        } else if (name == "independence") {
            r.value = independence(table).to_json(kX);
            r.provenance = "sum over table: (-1)^j x^(n-i+k) (x+1)^(i-k)";
        } else if (name == "sigma") {
            r.value = nlohmann::ordered_json{{"value", independent_set_count(table).get_str()}};
            r.provenance = "I(G,1)";
        } else if (name == "matching") {
            r.value = matching_poly(table).to_json(kXY);
            r.provenance = "sum over table: c_{n-i,i,i} x^(n-2i) y^i";
        } else if (name == "clique") {
            r.value = clique_poly(table).to_json(kX);
            r.provenance = "1 + n x + sum over table: c_{n-i+1,C(i,2),1} x^i";
        } else if (name == "line_subgraph_component") {
            r.value = line_graph_subgraph_component(c).to_json(kXY);
            r.provenance = "C(G,1,x,y)";
        } else if (name == "reliability") {
            nlohmann::ordered_json v;
            v["poly"] = no_isolated_probability_poly(table).to_json({"p"});
            if (p) {
                mpq_class val = no_isolated_probability(table, *p);
                v["at_p"] = mpq_class(*p).get_str();
                v["value"] = val.get_str();
            }
            r.value = std::move(v);
            r.provenance = "sum over table entries with i=k: p^j (1-p)^(m-j)";
        } else {
            throw Error("unknown specialization target: " + name);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace covpoly
