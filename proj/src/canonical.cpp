#include "covpoly/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace covpoly {

namespace {

// ---- forest path: rooted-center encoding (AHU) ----

std::string encode_rooted(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child;
    for (int u : adj[v])
        if (u != parent) child.push_back(encode_rooted(u, v, adj));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const std::vector<int>& comp, const std::vector<std::vector<int>>& adj) {
    if (comp.size() <= 2) return comp;
    std::vector<int> deg(adj.size(), 0);
    std::vector<int> layer;
    for (int v : comp) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) layer.push_back(v);
    }
    std::size_t remaining = comp.size();
    std::vector<int> cur = layer;
    while (remaining > 2) {
        remaining -= cur.size();
        std::vector<int> next;
        for (int v : cur)
            for (int u : adj[v])
                if (--deg[u] == 1) next.push_back(u);
        cur = std::move(next);
    }
    return cur;
}

std::string forest_key(const Multigraph& g, const ComponentStats& st) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<std::vector<int>> comps(st.components);
    for (int v = 0; v < g.vertex_count(); ++v) comps[st.labels[v]].push_back(v);

    std::vector<std::string> encodings;
    encodings.reserve(comps.size());
    for (const auto& comp : comps) {
        auto centers = tree_centers(comp, adj);
        std::string best = encode_rooted(centers[0], -1, adj);
        if (centers.size() == 2) best = std::min(best, encode_rooted(centers[1], -1, adj));
        encodings.push_back(std::move(best));
    }
    std::sort(encodings.begin(), encodings.end());
    std::string key = "F:";
    for (const auto& e : encodings) key += e;
    return key;
}

// ---- general path: refinement + pruned permutation search ----

struct RefinedGraph {
    int n = 0;
    std::vector<std::vector<int>> mult;  // off-diagonal multiplicities
    std::vector<int> loops;
    std::vector<std::vector<int>> cells;  // vertex ids grouped by final color, cell order canonical
};

RefinedGraph refine(const Multigraph& g) {
    RefinedGraph r;
    r.n = g.vertex_count();
    r.mult.assign(r.n, std::vector<int>(r.n, 0));
    r.loops.assign(r.n, 0);
    for (const auto& e : g.edges()) {
        if (e[0] == e[1])
            ++r.loops[e[0]];
        else {
            ++r.mult[e[0]][e[1]];
            ++r.mult[e[1]][e[0]];
        }
    }

    using Signature = std::vector<int>;
    std::vector<int> color(r.n, 0);
    const auto deg = g.degrees();
    {
        std::map<Signature, int> order;
        for (int v = 0; v < r.n; ++v) order[{deg[v], r.loops[v]}] = 0;
        int next = 0;
        for (auto& [sig, id] : order) id = next++;
        for (int v = 0; v < r.n; ++v) color[v] = order.at({deg[v], r.loops[v]});
    }

    int classes = r.n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
    while (true) {
        std::map<Signature, int> order;
        std::vector<Signature> sigs(r.n);
        for (int v = 0; v < r.n; ++v) {
            Signature s = {color[v]};
            // per color class, the sorted multiset of multiplicities to that class
            for (int c = 0; c < classes; ++c) {
                std::vector<int> row;
                for (int u = 0; u < r.n; ++u)
                    if (u != v && color[u] == c) row.push_back(r.mult[v][u]);
                std::sort(row.begin(), row.end());
                s.push_back(-1);  // class separator
                s.insert(s.end(), row.begin(), row.end());
            }
            sigs[v] = std::move(s);
            order[sigs[v]] = 0;
        }
        int next = 0;
        for (auto& [sig, id] : order) id = next++;
        std::vector<int> recolor(r.n);
        for (int v = 0; v < r.n; ++v) recolor[v] = order.at(sigs[v]);
        if (next == classes && recolor == color) break;
        color = std::move(recolor);
        classes = next;
    }

    r.cells.assign(classes, {});
    for (int v = 0; v < r.n; ++v) r.cells[color[v]].push_back(v);
    return r;
}

// depth-first lexicographic minimization of the permuted adjacency rows;
// row for position p is (mult to positions 0..p-1, loop count)
struct KeySearch {
    const RefinedGraph& rg;
    std::vector<int> order;           // positions 0..p-1 hold chosen vertices
    std::vector<char> used;
    std::vector<std::vector<int>> best;
    std::vector<std::vector<int>> current;
    bool have_best = false;

    explicit KeySearch(const RefinedGraph& r) : rg(r), used(r.n, 0) {
        order.reserve(r.n);
        current.resize(r.n);
    }

    void run() { descend(0, 0, 0, false); }

    // cell_idx/cell_pos track which refinement cell supplies the next vertex
    void descend(int p, int cell_idx, int cell_used, bool strictly_better) {
        if (p == rg.n) {
            if (!have_best || strictly_better) {
                best = current;
                have_best = true;
            }
            return;
        }
        if (cell_idx < static_cast<int>(rg.cells.size()) &&
            cell_used == static_cast<int>(rg.cells[cell_idx].size())) {
            descend(p, cell_idx + 1, 0, strictly_better);
            return;
        }
        for (int v : rg.cells[cell_idx]) {
            if (used[v]) continue;
            auto& row = current[p];
            row.clear();
            for (int q = 0; q < p; ++q) row.push_back(rg.mult[v][order[q]]);
            row.push_back(rg.loops[v]);

            bool better = strictly_better;
            if (!better && have_best) {
                if (row > best[p]) continue;
                if (row < best[p]) better = true;
            }
            used[v] = 1;
            order.push_back(v);
            descend(p + 1, cell_idx, cell_used + 1, better);
            order.pop_back();
            used[v] = 0;
        }
    }
};

std::string general_key(const Multigraph& g) {
    RefinedGraph rg = refine(g);
    KeySearch search(rg);
    search.run();
    std::string key = "G:" + std::to_string(rg.n) + ":";
    for (const auto& row : search.best)
        for (int x : row) {
            if (x < 250)
                key += static_cast<char>(1 + x);
            else
                key += static_cast<char>(251) + std::to_string(x) + static_cast<char>(252);
        }
    return key;
}

}  // namespace

std::string canonical_key(const Multigraph& g, int cap) {
    const auto st = component_stats(g);
    if (g.edge_count() == g.vertex_count() - st.components) return forest_key(g, st);
    if (g.vertex_count() > cap)
        throw CapExceededError("canonical key cap exceeded: n=" + std::to_string(g.vertex_count()) +
                               " > " + std::to_string(cap));
    return general_key(g);
}

bool canonical_key_available(const Multigraph& g, int cap) {
    return g.vertex_count() <= cap || is_forest(g);
}

}  // namespace covpoly
