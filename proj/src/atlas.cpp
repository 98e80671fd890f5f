#include "covpoly/atlas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "covpoly/graph_io.hpp"
#include "covpoly/specialize.hpp"

namespace covpoly {

namespace {

void parallel_indices(std::size_t count, int workers, const std::function<void(int, std::size_t)>& body) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(0, i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count; i += workers) body(w, i);
        });
    for (auto& t : pool) t.join();
}

std::vector<std::string> fingerprints_of(const std::vector<Multigraph>& graphs, Fingerprint kind,
                                         int workers, const EngineConfig& cfg) {
    std::vector<std::string> fps(graphs.size());
    std::vector<CcpEngine> engines;
    engines.reserve(std::max(workers, 1));
    for (int w = 0; w < std::max(workers, 1); ++w) engines.emplace_back(cfg);
    parallel_indices(graphs.size(), workers,
                     [&](int w, std::size_t i) { fps[i] = fingerprint_of(graphs[i], kind, engines[w]); });
    return fps;
}

}  // namespace

std::vector<Multigraph> free_trees(int n) {
    if (n < 1 || n > kFreeTreeCap)
        throw CapExceededError("free tree enumeration supports 1 <= n <= " + std::to_string(kFreeTreeCap));
    std::map<std::string, Multigraph> level;
    level.emplace(canonical_key(make_path(1)), make_path(1));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Multigraph> next;
        for (const auto& [key, tree] : level) {
            std::vector<Multigraph::Edge> base = tree.edges();
            for (int v = 0; v < k - 1; ++v) {
                auto edges = base;
                edges.push_back({v, k - 1});
                Multigraph grown(k, std::move(edges));
                next.try_emplace(canonical_key(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    out.reserve(level.size());
    for (auto& [key, tree] : level) out.push_back(std::move(tree));
    return out;
}

Fingerprint fingerprint_from_name(const std::string& name) {
    if (name == "ccp") return Fingerprint::Ccp;
    if (name == "eep") return Fingerprint::Eep;
    if (name == "bivariate_chromatic") return Fingerprint::BivariateChromatic;
    if (name == "chromatic") return Fingerprint::Chromatic;
    if (name == "potts") return Fingerprint::Potts;
    throw Error("unknown fingerprint: " + name);
}

std::string fingerprint_name(Fingerprint kind) {
    switch (kind) {
        case Fingerprint::Ccp: return "ccp";
        case Fingerprint::Eep: return "eep";
        case Fingerprint::BivariateChromatic: return "bivariate_chromatic";
        case Fingerprint::Chromatic: return "chromatic";
        case Fingerprint::Potts: return "potts";
    }
    return "?";
}

std::string fingerprint_of(const Multigraph& g, Fingerprint kind, CcpEngine& engine) {
    switch (kind) {
        case Fingerprint::Ccp: return engine.ccp(g).to_json_string(kXYZ);
        case Fingerprint::Eep: return engine.eep(g).to_json_string(kXYZ);
        case Fingerprint::BivariateChromatic:
            return bivariate_chromatic(engine.coefficient_table(g)).to_json_string(kXY);
        case Fingerprint::Chromatic: return chromatic(engine.ccp(g)).to_json_string(kX);
        case Fingerprint::Potts: return potts(engine.ccp(g)).to_json_string(kXY);
    }
    throw Error("unknown fingerprint kind");
}

CollisionReport collide(const std::vector<Multigraph>& graphs, Fingerprint kind, int workers,
                        const EngineConfig& cfg) {
    // isomorphism dedup up front; every key is also the within-bucket sort key
    std::vector<Multigraph> unique;
    std::vector<std::string> keys;
    {
        std::map<std::string, std::size_t> seen;
        for (const auto& g : graphs) {
            std::string key = canonical_key(g, cfg.canonical_cache_cap);
            if (seen.emplace(key, unique.size()).second) {
                unique.push_back(g);
                keys.push_back(std::move(key));
            }
        }
    }

    const auto fps = fingerprints_of(unique, kind, workers, cfg);
    std::map<std::string, std::vector<std::size_t>> by_fp;
    for (std::size_t i = 0; i < unique.size(); ++i) by_fp[fps[i]].push_back(i);

    CollisionReport rep;
    rep.kind = kind;
    rep.graph_count = unique.size();
    rep.class_count = by_fp.size();
    for (auto& [fp, members] : by_fp) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
        CollisionBucket bucket;
        bucket.fingerprint = fp;
        for (std::size_t i : members) bucket.graphs.push_back(unique[i]);
        // minimal pair parameters: the pair is complete at its second member
        std::vector<std::pair<int, int>> nm;
        for (std::size_t i : members) nm.emplace_back(unique[i].vertex_count(), unique[i].edge_count());
        std::sort(nm.begin(), nm.end());
        if (!rep.minimal_pair_nm || nm[1] < *rep.minimal_pair_nm) rep.minimal_pair_nm = nm[1];
        rep.buckets.push_back(std::move(bucket));
    }
    return rep;
}

std::optional<MinimalPair> minimal_pair_scan(std::vector<Multigraph> graphs, Fingerprint kind,
                                             int workers, const EngineConfig& cfg) {
    std::stable_sort(graphs.begin(), graphs.end(), [](const Multigraph& a, const Multigraph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.edge_count() < b.edge_count();
    });
    std::size_t start = 0;
    while (start < graphs.size()) {
        std::size_t end = start;
        while (end < graphs.size() && graphs[end].vertex_count() == graphs[start].vertex_count() &&
               graphs[end].edge_count() == graphs[start].edge_count())
            ++end;
        std::vector<Multigraph> group(graphs.begin() + start, graphs.begin() + end);
        CollisionReport rep = collide(group, kind, workers, cfg);
        if (!rep.buckets.empty()) {
            const auto& bucket = rep.buckets.front();
            MinimalPair pair;
            pair.n = bucket.graphs[0].vertex_count();
            pair.m = bucket.graphs[0].edge_count();
            pair.a = bucket.graphs[0];
            pair.b = bucket.graphs[1];
            return pair;
        }
        start = end;
    }
    return std::nullopt;
}

std::vector<std::pair<Multigraph, Multigraph>> crosscheck_distinctive_power(
    const std::vector<Multigraph>& graphs, Fingerprint collide_by, Fingerprint separate_by, int workers,
    const EngineConfig& cfg) {
    CollisionReport rep = collide(graphs, collide_by, workers, cfg);
    std::vector<std::pair<Multigraph, Multigraph>> out;
    CcpEngine engine(cfg);
    for (const auto& bucket : rep.buckets) {
        std::vector<std::string> other;
        other.reserve(bucket.graphs.size());
        for (const auto& g : bucket.graphs) other.push_back(fingerprint_of(g, separate_by, engine));
        for (std::size_t i = 0; i < bucket.graphs.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.graphs.size(); ++j)
                if (other[i] != other[j]) out.emplace_back(bucket.graphs[i], bucket.graphs[j]);
    }
    return out;
}

nlohmann::ordered_json CollisionReport::to_json() const {
    nlohmann::ordered_json j;
    j["fingerprint"] = fingerprint_name(kind);
    j["graph_count"] = graph_count;
    j["class_count"] = class_count;
    j["collision_buckets"] = nlohmann::ordered_json::array();
    for (const auto& bucket : buckets) {
        nlohmann::ordered_json b;
        b["fingerprint"] = nlohmann::ordered_json::parse(bucket.fingerprint);
        b["graphs"] = nlohmann::ordered_json::array();
        for (const auto& g : bucket.graphs) b["graphs"].push_back(format_edge_list(g));
        j["collision_buckets"].push_back(std::move(b));
    }
    if (minimal_pair_nm)
        j["minimal_pair"] = {{"n", minimal_pair_nm->first}, {"m", minimal_pair_nm->second}};
    else
        j["minimal_pair"] = nullptr;
    return j;
}

std::string CollisionReport::summary_text() const {
    std::map<int, std::pair<std::size_t, std::size_t>> per_n;  // n -> (graphs, buckets)
    for (const auto& bucket : buckets) ++per_n[bucket.graphs[0].vertex_count()].second;

    std::string out = "fingerprint=" + fingerprint_name(kind) + " graphs=" + std::to_string(graph_count) +
                      " classes=" + std::to_string(class_count) +
                      " collision_buckets=" + std::to_string(buckets.size()) + "\n";
    out += "n\tbuckets\tpairs\n";
    for (const auto& [n, counts] : per_n) {
        std::size_t pairs = 0;
        for (const auto& bucket : buckets)
            if (bucket.graphs[0].vertex_count() == n)
                pairs += bucket.graphs.size() * (bucket.graphs.size() - 1) / 2;
        out += std::to_string(n) + "\t" + std::to_string(counts.second) + "\t" + std::to_string(pairs) + "\n";
    }
    return out;
}

}  // namespace covpoly
