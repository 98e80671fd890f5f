#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covpoly/engine.hpp"
#include "covpoly/graph.hpp"

namespace covpoly {

inline constexpr int kFreeTreeCap = 14;

/// Exactly one representative per isomorphism class of free trees on n
/// vertices, grown by leaf attachment with canonical dedup; deterministic
/// order (sorted by canonical key).
std::vector<Multigraph> free_trees(int n);

enum class Fingerprint { Ccp, Eep, BivariateChromatic, Chromatic, Potts };

Fingerprint fingerprint_from_name(const std::string& name);
std::string fingerprint_name(Fingerprint kind);

/// Canonical JSON serialization bytes of the chosen polynomial.
std::string fingerprint_of(const Multigraph& g, Fingerprint kind, CcpEngine& engine);

struct CollisionBucket {
    std::string fingerprint;
    std::vector<Multigraph> graphs;  // pairwise non-isomorphic, sorted by canonical key
};

struct CollisionReport {
    Fingerprint kind = Fingerprint::Ccp;
    std::size_t graph_count = 0;  // after isomorphism dedup
    std::size_t class_count = 0;  // distinct fingerprints
    std::vector<CollisionBucket> buckets;
    std::optional<std::pair<int, int>> minimal_pair_nm;

    nlohmann::ordered_json to_json() const;
    std::string summary_text() const;
};

/// Buckets graphs by polynomial fingerprint. Isomorphic duplicates in the
/// input are dropped first, so every bucket of size >= 2 certifies a
/// collision. Deterministic for any worker count.
CollisionReport collide(const std::vector<Multigraph>& graphs, Fingerprint kind, int workers = 1,
                        const EngineConfig& cfg = {});

struct MinimalPair {
    int n = 0;
    int m = 0;
    Multigraph a, b;
};

/// First collision in (n, m)-lexicographic order, or empty when none.
std::optional<MinimalPair> minimal_pair_scan(std::vector<Multigraph> graphs, Fingerprint kind,
                                             int workers = 1, const EngineConfig& cfg = {});

/// Pairs that `collide_by` fails to distinguish but `separate_by` does.
std::vector<std::pair<Multigraph, Multigraph>> crosscheck_distinctive_power(
    const std::vector<Multigraph>& graphs, Fingerprint collide_by, Fingerprint separate_by,
    int workers = 1, const EngineConfig& cfg = {});

}  // namespace covpoly
