#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>

#include "covpoly/canonical.hpp"
#include "covpoly/graph.hpp"
#include "covpoly/poly.hpp"

namespace covpoly {

/// Counts c_{i,j,k} of edge subsets by (components, edges, covered components),
/// the lossless data behind every specialization.
struct CoefficientTable {
    int n = 0;
    int m = 0;
    std::map<std::array<int, 3>, mpz_class> entries;

    static CoefficientTable from_poly(const TriPoly& c, int n, int m);
    TriPoly to_poly() const;
    /// Checks the structural identities (sum = 2^m, empty subset entry, bounds).
    void validate() const;
};

struct EngineConfig {
    int brute_force_edge_cap = 20;
    int canonical_cache_cap = kDefaultCanonicalCap;

    enum class EdgeSelection { PendantThenMaxDegree, UniformRandom };
    EdgeSelection edge_selection = EdgeSelection::PendantThenMaxDegree;
    std::uint64_t selection_seed = 0;

    bool split_components = true;
    bool use_pendant_rule = true;
    // verified identities, off by default; the general recurrence already covers them
    bool use_articulation_rule = false;
    bool use_bridge_rule = false;

    // memory guard: the memo table is flushed when it grows past this
    std::size_t cache_entry_limit = 1u << 21;
};

/// Memoized deletion/contraction/extraction engine for C(G,x,y,z) and
/// the edge elimination polynomial. Single-owner: create one per thread.
class CcpEngine {
public:
    CcpEngine() = default;
    explicit CcpEngine(EngineConfig cfg);

    const EngineConfig& config() const { return cfg_; }

    TriPoly ccp(const Multigraph& g);
    TriPoly ccp(const Hypergraph& g);
    TriPoly eep(const Multigraph& g);

    CoefficientTable coefficient_table(const Multigraph& g);
    CoefficientTable coefficient_table(const Hypergraph& g);

    std::size_t cache_size() const { return ccp_cache_.size() + eep_cache_.size(); }
    void clear_cache();

private:
    TriPoly ccp_multigraph(const Multigraph& g);
    TriPoly ccp_hypergraph(const Hypergraph& g);
    TriPoly eep_multigraph(const Multigraph& g);
    bool try_structured_reduction(const Multigraph& g, TriPoly& out);
    int select_edge(const Multigraph& g);
    int select_edge(const Hypergraph& g);
    void guard_cache();

    EngineConfig cfg_;
    std::mt19937_64 rng_{cfg_.selection_seed};
    std::unordered_map<std::string, TriPoly> ccp_cache_;
    std::unordered_map<std::string, TriPoly> eep_cache_;
};

/// Definition-level oracle: sums x^k y^|A| z^c over all 2^m edge subsets.
TriPoly ccp_bruteforce(const Multigraph& g, int edge_cap = 20);
TriPoly ccp_bruteforce(const Hypergraph& g, int edge_cap = 20);

/// Double-subset expansion of the edge elimination polynomial over pairs of
/// vertex-disjoint edge subsets; independent of the recurrence path.
TriPoly eep_subset_expansion(const Multigraph& g, int edge_cap = 12);

/// Bilinear identity joining C(G1), C(G1-v), C(G2), C(G2-v) at a shared
/// articulation vertex; Laurent arithmetic with cancellation asserted.
TriPoly articulation_join(const TriPoly& c1, const TriPoly& c1_minus_v, const TriPoly& c2,
                          const TriPoly& c2_minus_v);

/// Bridge identity from C(G-e), C(G-v1), C(G-v2), C(G extract e).
TriPoly bridge_reduction(const TriPoly& c_minus_e, const TriPoly& c_minus_v1,
                         const TriPoly& c_minus_v2, const TriPoly& c_extract);

/// Closed forms for paths, cycles (extended convention, n >= 1), stars and
/// complete graphs (via the connected-subgraph recurrence).
TriPoly family_ccp(FamilyKind kind, int n);

/// Number of spanning subgraphs of the n-vertex path with i edges and k
/// covered components.
mpz_class path_subgraph_count(int n, int i, int k);

/// Number of connected labeled graphs on i vertices with j edges.
mpz_class connected_graph_count(int i, int j);

/// Number of k-matchings of the n-cycle, 0 < k < n; exact division asserted.
mpz_class cycle_matching_count(int n, int k);

}  // namespace covpoly
