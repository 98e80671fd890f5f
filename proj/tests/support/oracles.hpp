#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "covpoly/graph.hpp"
#include "covpoly/poly.hpp"

// Test-only oracles, independent of the library's computation paths.
namespace covpoly::testing {

/// All vertex bijections, compared on edge multisets; n <= 9.
bool brute_force_isomorphic(const Multigraph& a, const Multigraph& b);

/// Proper colorings with q colors; loops admit none, parallel edges collapse.
long proper_coloring_count(const Multigraph& g, int q);

/// Counts by subset enumeration over vertices.
std::map<int, long> independent_sets_by_size(const Multigraph& g);
std::map<int, long> vertex_covers_by_size(const Multigraph& g);

/// Matchings (loops excluded) counted by size.
std::map<int, long> matchings_by_size(const Multigraph& g);

/// Connected labeled graphs on i vertices with j edges, by enumeration; i <= 5.
long labeled_connected_count(int i, int j);

/// Distinct canonical keys of all labeled trees on n vertices; n <= 8.
std::vector<std::string> prufer_tree_keys(int n);

/// Every multigraph with exactly n vertices and m edges (edge multisets over
/// the n(n+1)/2 loop/pair slots), streamed to the callback.
void enumerate_multigraphs(int n, int m, const std::function<void(const Multigraph&)>& fn);

/// Representatives of all simple graphs on n vertices up to isomorphism.
std::vector<Multigraph> simple_graph_classes(int n);

struct RandomGraphOptions {
    int max_n = 8;
    int max_m = 12;
    bool allow_loops = true;
    bool allow_parallel = true;
};

Multigraph random_multigraph(std::mt19937_64& rng, const RandomGraphOptions& opt = {});
Multigraph random_forest(std::mt19937_64& rng, int max_n);
Hypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_m, int max_arity);

TriPoly random_tripoly(std::mt19937_64& rng, int max_terms = 8, int max_exp = 4, int coeff_bound = 9);

}  // namespace covpoly::testing
