#include "covpoly/graph.hpp"

#include <algorithm>
#include <numeric>

namespace covpoly {

namespace {

// union-find over a fixed vertex range
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

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

template <class EdgeList>
ComponentStats stats_impl(int n, const EdgeList& edges) {
    Dsu dsu(n);
    std::vector<char> touched(n, 0);
    for (const auto& e : edges) {
        int first = e[0];
        touched[first] = 1;
        for (int v : e) {
            touched[v] = 1;
            dsu.unite(first, v);
        }
    }
    ComponentStats st;
    st.labels.assign(n, -1);
    std::vector<char> root_covered(n, 0);
    for (int v = 0; v < n; ++v)
        if (touched[v]) root_covered[dsu.find(v)] = 1;
    int next = 0;
    std::vector<int> root_label(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (root_label[r] < 0) {
            root_label[r] = next++;
            ++st.components;
            if (root_covered[r])
                ++st.covered;
            else
                ++st.isolated;
        }
        st.labels[v] = root_label[r];
    }
    return st;
}

// dense reindex map after deleting a sorted set of vertices; -1 marks removed
std::vector<int> reindex_after_removal(int n, const std::vector<int>& removed_sorted) {
    std::vector<int> map(n);
    std::size_t r = 0;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (r < removed_sorted.size() && removed_sorted[r] == v) {
            map[v] = -1;
            ++r;
        } else {
            map[v] = next++;
        }
    }
    return map;
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidSizeError("negative vertex count");
    for (auto& e : edges_) {
        check_vertex(e[0], n_);
        check_vertex(e[1], n_);
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    }
    std::sort(edges_.begin(), edges_.end());
}

Multigraph Multigraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
}

const Multigraph::Edge& Multigraph::edge(int idx) const {
    check_edge_index(idx);
    return edges_[idx];
}

void Multigraph::check_edge_index(int idx) const {
    if (idx < 0 || idx >= edge_count())
        throw MissingEdgeError("edge index " + std::to_string(idx) + " not present (m=" + std::to_string(edge_count()) + ")");
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        deg[e[0]] += 1;
        deg[e[1]] += 1;  // a loop hits the same slot twice
    }
    return deg;
}

bool Multigraph::has_loop() const {
    for (const auto& e : edges_)
        if (e[0] == e[1]) return true;
    return false;
}

bool Multigraph::has_parallel_edges() const {
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) return true;
    return false;
}

int Multigraph::find_edge(const Edge& e) const {
    Edge key = e;
    if (key[0] > key[1]) std::swap(key[0], key[1]);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        throw MissingEdgeError("edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "} not present");
    return static_cast<int>(it - edges_.begin());
}

Multigraph Multigraph::delete_edge(int idx) const {
    check_edge_index(idx);
    std::vector<Edge> edges = edges_;
    edges.erase(edges.begin() + idx);
    Multigraph out;
    out.n_ = n_;
    out.edges_ = std::move(edges);  // still sorted
    return out;
}

Multigraph Multigraph::contract_edge(int idx) const {
    check_edge_index(idx);
    const Edge e = edges_[idx];
    const int u = e[0], v = e[1];
    std::vector<Edge> edges;
    edges.reserve(edges_.size() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        if (i == idx) continue;
        Edge f = edges_[i];
        if (u != v) {
            for (int& w : f) {
                if (w == v)
                    w = u;
                else if (w > v)
                    --w;
            }
        }
        if (f[0] > f[1]) std::swap(f[0], f[1]);
        edges.push_back(f);
    }
    return Multigraph(u == v ? n_ : n_ - 1, std::move(edges));
}

Multigraph Multigraph::extract_edge(int idx) const {
    check_edge_index(idx);
    const Edge e = edges_[idx];
    std::vector<int> removed = {e[0]};
    if (e[1] != e[0]) removed.push_back(e[1]);
    auto map = reindex_after_removal(n_, removed);
    std::vector<Edge> edges;
    for (const auto& f : edges_) {
        if (map[f[0]] < 0 || map[f[1]] < 0) continue;
        edges.push_back({map[f[0]], map[f[1]]});
    }
    return Multigraph(n_ - static_cast<int>(removed.size()), std::move(edges));
}

Multigraph Multigraph::delete_vertex(int v) const {
    check_vertex(v, n_);
    auto map = reindex_after_removal(n_, {v});
    std::vector<Edge> edges;
    for (const auto& f : edges_) {
        if (f[0] == v || f[1] == v) continue;
        edges.push_back({map[f[0]], map[f[1]]});
    }
    return Multigraph(n_ - 1, std::move(edges));
}

Multigraph Multigraph::induced(const std::vector<int>& keep) const {
    std::vector<int> map(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i], n_);
        map[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& f : edges_) {
        if (map[f[0]] < 0 || map[f[1]] < 0) continue;
        edges.push_back({map[f[0]], map[f[1]]});
    }
    return Multigraph(static_cast<int>(keep.size()), std::move(edges));
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidSizeError("negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) throw InvalidSizeError("empty hyperedge");
        for (int v : e) check_vertex(v, n_);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::sort(edges_.begin(), edges_.end());
}

Hypergraph::Hypergraph(const Multigraph& g) {
    n_ = g.vertex_count();
    for (const auto& e : g.edges()) {
        if (e[0] == e[1])
            edges_.push_back({e[0]});
        else
            edges_.push_back({e[0], e[1]});
    }
    std::sort(edges_.begin(), edges_.end());
}

const Hypergraph::Edge& Hypergraph::edge(int idx) const {
    check_edge_index(idx);
    return edges_[idx];
}

void Hypergraph::check_edge_index(int idx) const {
    if (idx < 0 || idx >= edge_count())
        throw MissingEdgeError("edge index " + std::to_string(idx) + " not present (m=" + std::to_string(edge_count()) + ")");
}

int Hypergraph::max_arity() const {
    std::size_t a = 0;
    for (const auto& e : edges_) a = std::max(a, e.size());
    return static_cast<int>(a);
}

Multigraph Hypergraph::to_multigraph() const {
    std::vector<Multigraph::Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.size() == 1)
            edges.push_back({e[0], e[0]});
        else if (e.size() == 2)
            edges.push_back({e[0], e[1]});
        else
            throw InvalidSizeError("hyperedge of arity > 2 cannot become a multigraph edge");
    }
    return Multigraph(n_, std::move(edges));
}

int Hypergraph::find_edge(const Edge& e) const {
    Edge key = e;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) throw MissingEdgeError("hyperedge not present");
    return static_cast<int>(it - edges_.begin());
}

Hypergraph Hypergraph::delete_edge(int idx) const {
    check_edge_index(idx);
    std::vector<Edge> edges = edges_;
    edges.erase(edges.begin() + idx);
    Hypergraph out;
    out.n_ = n_;
    out.edges_ = std::move(edges);
    return out;
}

Hypergraph Hypergraph::contract_edge(int idx) const {
    check_edge_index(idx);
    const Edge e = edges_[idx];
    const int survivor = e[0];
    std::vector<int> removed(e.begin() + 1, e.end());
    auto map = reindex_after_removal(n_, removed);
    std::vector<Edge> edges;
    edges.reserve(edges_.size() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        if (i == idx) continue;
        Edge f;
        for (int w : edges_[i]) f.push_back(map[w] < 0 ? map[survivor] : map[w]);
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        edges.push_back(std::move(f));
    }
    std::sort(edges.begin(), edges.end());
    Hypergraph out;
    out.n_ = n_ - static_cast<int>(removed.size());
    out.edges_ = std::move(edges);
    return out;
}

Hypergraph Hypergraph::extract_edge(int idx) const {
    check_edge_index(idx);
    const Edge e = edges_[idx];
    auto map = reindex_after_removal(n_, e);
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count(); ++i) {
        if (i == idx) continue;
        Edge f;
        bool hit = false;
        for (int w : edges_[i]) {
            if (map[w] < 0) {
                hit = true;
                break;
            }
            f.push_back(map[w]);
        }
        if (!hit) edges.push_back(std::move(f));
    }
    std::sort(edges.begin(), edges.end());
    Hypergraph out;
    out.n_ = n_ - static_cast<int>(e.size());
    out.edges_ = std::move(edges);
    return out;
}

Hypergraph Hypergraph::induced(const std::vector<int>& keep) const {
    std::vector<int> map(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i], n_);
        map[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
        Edge f;
        bool out_of_range = false;
        for (int w : e) {
            if (map[w] < 0) {
                out_of_range = true;
                break;
            }
            f.push_back(map[w]);
        }
        if (!out_of_range) edges.push_back(std::move(f));
    }
    std::sort(edges.begin(), edges.end());
    Hypergraph out;
    out.n_ = static_cast<int>(keep.size());
    out.edges_ = std::move(edges);
    return out;
}

ComponentStats component_stats(const Multigraph& g) { return stats_impl(g.vertex_count(), g.edges()); }
ComponentStats component_stats(const Hypergraph& g) { return stats_impl(g.vertex_count(), g.edges()); }

bool is_forest(const Multigraph& g) {
    return g.edge_count() == g.vertex_count() - component_stats(g).components;
}

StructuralReport structural_queries(const Multigraph& g) {
    StructuralReport rep;
    const auto deg = g.degrees();
    const int k = component_stats(g).components;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e[0] != e[1] && (deg[e[0]] == 1 || deg[e[1]] == 1)) rep.pendant_edges.push_back(i);
        if (component_stats(g.delete_edge(i)).components > k) rep.bridges.push_back(i);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (component_stats(g.delete_vertex(v)).components > k) rep.articulation_vertices.push_back(v);
    return rep;
}

Multigraph make_path(int n) {
    if (n < 0) throw InvalidSizeError("path size must be >= 0");
    std::vector<Multigraph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph make_cycle(int n) {
    if (n < 1) throw InvalidSizeError("cycle size must be >= 1");
    std::vector<Multigraph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});  // C_1 gets a loop, C_2 a parallel pair
    return Multigraph(n, std::move(edges));
}

Multigraph make_star(int n) {
    if (n < 0) throw InvalidSizeError("star size must be >= 0");
    std::vector<Multigraph::Edge> edges;
    for (int v = 1; v <= n; ++v) edges.push_back({0, v});
    return Multigraph(n + 1, std::move(edges));
}

Multigraph make_complete(int n) {
    if (n < 0) throw InvalidSizeError("complete-graph size must be >= 0");
    std::vector<Multigraph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
}

Multigraph make_edgeless(int n) {
    if (n < 0) throw InvalidSizeError("edgeless size must be >= 0");
    return Multigraph(n, {});
}

Multigraph make_wheel(int n) {
    if (n < 3) throw InvalidSizeError("wheel size must be >= 3");
    std::vector<Multigraph::Edge> edges;
    for (int v = 1; v <= n; ++v) {
        edges.push_back({0, v});
        edges.push_back({v, v == n ? 1 : v + 1});
    }
    return Multigraph(n + 1, std::move(edges));
}

Multigraph make_family(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::Path: return make_path(n);
        case FamilyKind::Cycle: return make_cycle(n);
        case FamilyKind::Star: return make_star(n);
        case FamilyKind::Complete: return make_complete(n);
        case FamilyKind::Edgeless: return make_edgeless(n);
        case FamilyKind::Wheel: return make_wheel(n);
    }
    throw InvalidSizeError("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "path") return FamilyKind::Path;
    if (name == "cycle") return FamilyKind::Cycle;
    if (name == "star") return FamilyKind::Star;
    if (name == "complete") return FamilyKind::Complete;
    if (name == "edgeless") return FamilyKind::Edgeless;
    if (name == "wheel") return FamilyKind::Wheel;
    throw InvalidSizeError("unknown family kind: " + name);
}

Multigraph line_graph(const Multigraph& g) {
    if (!g.simple()) throw NotSimpleError("line graph requires a simple graph");
    std::vector<Multigraph::Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const auto& a = g.edge(i);
            const auto& b = g.edge(j);
            if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) edges.push_back({i, j});
        }
    return Multigraph(g.edge_count(), std::move(edges));
}

}  // namespace covpoly
