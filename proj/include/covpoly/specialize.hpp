#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covpoly/engine.hpp"
#include "covpoly/graph.hpp"
#include "covpoly/poly.hpp"

namespace covpoly {

/// Every derived polynomial below is an exact transform of the coefficient
/// table c_{i,j,k} (or of C itself); the rational substitutions in the
/// underlying relations are realized as coefficient transforms so results
/// stay in integer polynomial rings.

/// xi(G,x,y,z) = sum c_{i,j,k} x^{i-k} y^{j-k} (z+xy)^k.
TriPoly to_eep(const CoefficientTable& t);

/// C(G,x,y,z) = xi(G,x,y,xyz-xy).
TriPoly from_eep(const TriPoly& xi);

/// Z(G,x,y) = C(G,x,y,1).
BiPoly potts(const TriPoly& c);

/// chi(G,x) = C(G,x,-1,1).
UniPoly chromatic(const TriPoly& c);

/// P(G,x,y) = sum c_{i,j,k} (-1)^j x^{i-k} y^k.
BiPoly bivariate_chromatic(const CoefficientTable& t);

/// Psi(G,x) = sum c_{i,j,k} (-1)^j (x+1)^{i-k}.
UniPoly vertex_cover(const CoefficientTable& t);

/// Same polynomial by the deletion/contraction/extraction recurrence
/// Psi(G) = Psi(G-e) - Psi(G/e) + x Psi(G extract e), Psi(K1) = x+1.
UniPoly vertex_cover_recurrence(const Multigraph& g);

/// I(G,x) = sum c_{i,j,k} (-1)^j x^{n-(i-k)} (x+1)^{i-k}.
UniPoly independence(const CoefficientTable& t);

/// sigma(G) = I(G,1) = sum c_{i,j,k} (-1)^j 2^{i-k}.
mpz_class independent_set_count(const CoefficientTable& t);

/// M(G,x,y) = sum_i c_{n-i,i,i} x^{n-2i} y^i.
BiPoly matching_poly(const CoefficientTable& t);

/// Clique polynomial of a simple graph; non-simple tables are rejected.
UniPoly clique_poly(const CoefficientTable& t);

/// Q(L(G),x,y) = C(G,1,x,y).
BiPoly line_graph_subgraph_component(const TriPoly& c);

/// Q(H,x,y) = sum over vertex subsets W of x^{|W|} y^{k(H[W])}.
BiPoly subgraph_component_bruteforce(const Multigraph& h, int vertex_cap = 12);

/// Probability that a p-random spanning subgraph has no isolated vertex.
mpq_class no_isolated_probability(const CoefficientTable& t, const mpq_class& p);
UniPoly no_isolated_probability_poly(const CoefficientTable& t);

/// Simplicity decided from the polynomial itself (girth > 2 or forest).
bool table_is_simple(const CoefficientTable& t);

/// Colorings of a hypergraph with `colors` colors where a monochromatic
/// edge may only use a color above `low`.
mpz_class hyper_chromatic_count(const Hypergraph& h, long colors, long low);

/// P(G) = P(G-e) - P(G/e) + (x-y) P(G extract e), P(K1) = x.
BiPoly hyper_bivariate_chromatic(const Hypergraph& h);

/// P(G,x,y) = C(G,x,-1,y/x) as a table transform.
BiPoly hyper_bivariate_chromatic_from_table(const CoefficientTable& t);

/// Exact bivariate interpolation through counted integer points.
BiPoly hyper_bivariate_chromatic_interpolated(const Hypergraph& h);

struct SpecializationResult {
    std::string name;
    nlohmann::ordered_json value;
    std::string provenance;
};

/// Dispatch by target name for the CLI and bindings; `p` feeds reliability.
std::vector<SpecializationResult> specialize(const Multigraph& g, const std::vector<std::string>& which,
                                             CcpEngine& engine,
                                             const std::optional<mpq_class>& p = std::nullopt);

std::vector<std::string> specialization_names();

}  // namespace covpoly
