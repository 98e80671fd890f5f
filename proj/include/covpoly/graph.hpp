#pragma once

#include <array>
#include <string>
#include <vector>

#include "covpoly/errors.hpp"

namespace covpoly {

/// Undirected multigraph on vertices 0..n-1. Edges are stored normalized:
/// each edge as {u, v} with u <= v (a loop is {v, v}) and the edge list
/// sorted, so edge indices are deterministic for a given graph value.
class Multigraph {
public:
    using Edge = std::array<int, 2>;

    Multigraph() = default;
    Multigraph(int n, std::vector<Edge> edges);

    static Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const;
    bool is_loop(int idx) const { return edge(idx)[0] == edge(idx)[1]; }

    /// Loops contribute 2 to their vertex's degree.
    std::vector<int> degrees() const;
    bool has_loop() const;
    bool has_parallel_edges() const;
    bool simple() const { return !has_loop() && !has_parallel_edges(); }

    /// Index of an edge equal to e, or a MissingEdgeError.
    int find_edge(const Edge& e) const;

    Multigraph delete_edge(int idx) const;
    Multigraph contract_edge(int idx) const;
    Multigraph extract_edge(int idx) const;
    Multigraph delete_vertex(int v) const;

    /// Subgraph induced by a sorted list of vertices, reindexed to 0..k-1.
    Multigraph induced(const std::vector<int>& keep) const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Multigraph& a, const Multigraph& b) { return !(a == b); }

private:
    void check_edge_index(int idx) const;

    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Hypergraph on vertices 0..n-1; each edge is a nonempty vertex subset,
/// stored sorted and deduplicated, edge list sorted.
class Hypergraph {
public:
    using Edge = std::vector<int>;

    Hypergraph() = default;
    Hypergraph(int n, std::vector<Edge> edges);
    explicit Hypergraph(const Multigraph& g);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const;

    int max_arity() const;
    /// Conversion when every edge has at most two vertices.
    Multigraph to_multigraph() const;

    int find_edge(const Edge& e) const;

    Hypergraph delete_edge(int idx) const;
    /// All vertices of the edge merge into the lowest incident index.
    Hypergraph contract_edge(int idx) const;
    Hypergraph extract_edge(int idx) const;

    Hypergraph induced(const std::vector<int>& keep) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

private:
    void check_edge_index(int idx) const;

    int n_ = 0;
    std::vector<Edge> edges_;
};

struct ComponentStats {
    int components = 0;  // k
    int covered = 0;     // c, components containing at least one edge
    int isolated = 0;    // i = k - c
    std::vector<int> labels;  // vertex -> component id, numbered by smallest vertex
};

ComponentStats component_stats(const Multigraph& g);
ComponentStats component_stats(const Hypergraph& g);

/// m = n - k characterizes forests (loops and parallel edges always add cycles).
bool is_forest(const Multigraph& g);

struct StructuralReport {
    std::vector<int> pendant_edges;          // edge indices
    std::vector<int> bridges;                // edge indices, k(G-e) > k(G)
    std::vector<int> articulation_vertices;  // k(G-v) > k(G)
};

StructuralReport structural_queries(const Multigraph& g);

enum class FamilyKind { Path, Cycle, Star, Complete, Edgeless, Wheel };

/// Canonical constructions. Star S_n and wheel W_n have n+1 vertices;
/// cycle sizes follow the extended convention C_1 = loop vertex and
/// C_2 = two vertices joined by parallel edges.
Multigraph make_family(FamilyKind kind, int n);
Multigraph make_path(int n);
Multigraph make_cycle(int n);
Multigraph make_star(int n);
Multigraph make_complete(int n);
Multigraph make_edgeless(int n);
Multigraph make_wheel(int n);

FamilyKind family_kind_from_name(const std::string& name);

/// Vertices are the edges of g, adjacency is sharing an endpoint; g must be simple.
Multigraph line_graph(const Multigraph& g);

}  // namespace covpoly
