#pragma once

#include <map>
#include <optional>
#include <utility>

#include "covpoly/graph.hpp"
#include "covpoly/poly.hpp"

namespace covpoly {

struct BasicCounts {
    int n = 0, m = 0, k = 0, c = 0, i = 0;
};

/// n = deg_x, m = deg_y, then k/c/i from the y^m coefficient slice.
BasicCounts basic_counts(const TriPoly& cp);

/// Smallest j with a positive coefficient of x^{n-j+1} y^j z^1, together
/// with that coefficient; empty for forests.
std::optional<std::pair<int, mpz_class>> girth_info(const TriPoly& cp, int n);

/// No cycle of length 1 or 2 means neither loops nor parallel edges.
bool poly_is_simple(const TriPoly& cp, int n);

/// Minimum degree and the number of vertices attaining it, read off the
/// polynomial; stated for simple graphs. Counts fall back to the isolated
/// and degree-one extractions when the minimum degree is 0 or 1.
std::optional<std::pair<int, mpz_class>> min_degree_info(const TriPoly& cp, const BasicCounts& bc);

mpz_class degree_one_count(const TriPoly& cp, const BasicCounts& bc);

/// Number of edge-induced subgraphs with n2 vertices, m2 edges, k2 components.
mpz_class edge_induced_subgraph_count(const TriPoly& cp, int n, int n2, int m2, int k2);

std::optional<int> clique_number_from_poly(const TriPoly& cp, int n);

/// (#P3, M1): edge-induced paths on three vertices and the first Zagreb index.
std::pair<mpz_class, mpz_class> p3_and_m1(const TriPoly& cp, int n, int m);

struct InvariantReport {
    int n = 0, m = 0, k = 0, c = 0, i = 0;
    std::optional<int> girth;
    std::optional<mpz_class> girth_count;
    bool simple = true;
    std::optional<int> min_degree;
    std::optional<mpz_class> min_degree_count;
    std::optional<mpz_class> deg1_count;
    std::optional<int> clique_number;
    std::optional<mpz_class> p3_count;
    std::optional<mpz_class> m1_index;

    nlohmann::ordered_json to_json() const;
};

/// Full polynomial-side report; simple-only fields stay empty for multigraphs.
InvariantReport extract_invariants(const TriPoly& cp);

// direct graph-side computations used for cross-validation
std::optional<std::pair<int, long>> girth_direct(const Multigraph& g);
std::map<int, int> degree_histogram(const Multigraph& g);
std::optional<int> clique_number_direct(const Multigraph& g);
long p3_count_direct(const Multigraph& g);
long m1_index_direct(const Multigraph& g);

}  // namespace covpoly
