#include "covpoly/forest.hpp"

#include "covpoly/invariants.hpp"
#include "covpoly/specialize.hpp"

namespace covpoly {

namespace {

void require_forest(const Multigraph& g) {
    if (!is_forest(g)) throw NotForestError("input graph contains a cycle");
}

TriPoly xi_hat_rec(const Multigraph& f) {
    if (f.edge_count() == 0) return TriPoly::monomial({f.vertex_count(), 0, 0});
    const auto deg = f.degrees();
    int pendant = -1;
    for (int i = 0; i < f.edge_count(); ++i) {
        const auto& e = f.edge(i);
        if (deg[e[0]] == 1 || deg[e[1]] == 1) {
            pendant = i;
            break;
        }
    }
    // a forest with an edge always has a pendant edge
    return TriPoly::monomial({0, 1, 0}) * xi_hat_rec(f.contract_edge(pendant)) +
           TriPoly::monomial({0, 0, 1}) * xi_hat_rec(f.extract_edge(pendant));
}

}  // namespace

TriPoly xi_hat(const Multigraph& forest) {
    require_forest(forest);
    return xi_hat_rec(forest);
}

void check_xi_hat_identities(const Multigraph& forest, CcpEngine& engine) {
    require_forest(forest);
    const TriPoly hat = xi_hat(forest);
    const TriPoly xi = engine.eep(forest);
    const TriPoly c = engine.ccp(forest);
    const CoefficientTable table =
        CoefficientTable::from_poly(c, forest.vertex_count(), forest.edge_count());

    const TriPoly x = TriPoly::monomial({1, 0, 0});

    // xi_hat(x,a,b) = xi(x, a-x, b): substitute y := a - x into xi
    if (xi.substitute(1, TriPoly::monomial({0, 1, 0}) - x) != hat)
        throw IdentityViolationError("xi(x, a-x, b) != xi_hat");

    // xi(x,y,z) = xi_hat(x, x+y, z)
    if (hat.substitute(1, x + TriPoly::monomial({0, 1, 0})) != xi)
        throw IdentityViolationError("xi_hat(x, x+y, z) != xi");

    // xi_hat = sum over table of x^{i-k} (a-x)^{j-k} (x(a-x)+b)^k, the
    // polynomial form of C(x, a-x, 1 + b/(x(a-x)))
    {
        const TriPoly a_minus_x = TriPoly::monomial({0, 1, 0}) - x;
        const TriPoly base = x * a_minus_x + TriPoly::monomial({0, 0, 1});
        std::vector<TriPoly> base_pow = {TriPoly::constant(1)};
        std::vector<TriPoly> amx_pow = {TriPoly::constant(1)};
        TriPoly sum;
        for (const auto& [e, coef] : table.entries) {
            const auto [i, j, k] = std::tuple(e[0], e[1], e[2]);
            while (static_cast<int>(base_pow.size()) <= k) base_pow.push_back(base_pow.back() * base);
            while (static_cast<int>(amx_pow.size()) <= j - k) amx_pow.push_back(amx_pow.back() * a_minus_x);
            sum += TriPoly::monomial({i - k, 0, 0}, coef) * amx_pow[j - k] * base_pow[k];
        }
        if (sum != hat) throw IdentityViolationError("table transform of C != xi_hat");
    }

    // C(x,y,z) = xi_hat(x, x+y, xyz-xy)
    {
        TriPoly sub = hat.substitute(1, x + TriPoly::monomial({0, 1, 0}));
        sub = sub.substitute(2, TriPoly::monomial({1, 1, 1}) - TriPoly::monomial({1, 1, 0}));
        if (sub != c) throw IdentityViolationError("xi_hat(x, x+y, xyz-xy) != C");
    }
}

std::map<int, mpz_class> forest_degree_sequence(const Multigraph& forest, CcpEngine& engine) {
    require_forest(forest);
    const TriPoly c = engine.ccp(forest);
    const BasicCounts bc = basic_counts(c);

    std::map<int, mpz_class> counts;
    if (bc.i > 0) counts[0] = bc.i;
    if (bc.m >= 1) {
        mpz_class d1 = degree_one_count(c, bc);
        if (d1 > 0) counts[1] = d1;
    }

    const TriPoly hat1 = xi_hat(forest).evaluate_at(1, 1);  // xi_hat(F, x, 1, b)
    for (int i = 2; i <= bc.n; ++i) {
        mpz_class cnt = hat1.coeff({bc.k + i - 2, 0, 1}) - hat1.coeff({bc.k + i - 1, 0, 1});
        if (cnt != 0) counts[i] = cnt;
    }
    return counts;
}

TriPoly xi_from_bivariate_chromatic(const BiPoly& p) {
    if (p.is_zero()) throw MalformedPolynomialError("zero polynomial is not a bivariate chromatic polynomial");
    const int n = p.degree(0).value();

    // P(F, x, x-z) as a polynomial in (x, z)
    const TriPoly p3 = p.embed<3>({0, 1});
    const TriPoly fixed =
        p3.substitute(1, TriPoly::monomial({1, 0, 0}) - TriPoly::monomial({0, 0, 1}));

    TriPoly xi;
    for (const auto& [e, coef] : fixed.terms()) {
        const int i = e[0], k = e[2];
        const int j = n - i - 2 * k;
        if (j < 0)
            throw MalformedPolynomialError("negative edge count during reconstruction; not a forest polynomial");
        // the coefficient carries (-1)^j from the y := -1 view it came from
        xi.add_term({i, j, k}, j % 2 == 0 ? coef : -coef);
    }
    return xi;
}

}  // namespace covpoly
