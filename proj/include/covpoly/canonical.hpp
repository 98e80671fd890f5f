#pragma once

#include <string>

#include "covpoly/graph.hpp"

namespace covpoly {

inline constexpr int kDefaultCanonicalCap = 11;

/// Isomorphism-invariant fingerprint: equal keys iff isomorphic graphs.
/// Forests of any size use a rooted-center encoding; other multigraphs up
/// to `cap` vertices use color refinement followed by a pruned permutation
/// search minimizing the serialized adjacency multiset. Beyond the cap a
/// CapExceededError is thrown and callers must fall back to uncached work.
std::string canonical_key(const Multigraph& g, int cap = kDefaultCanonicalCap);

/// True when the graph has a key under the given cap (forest or n <= cap).
bool canonical_key_available(const Multigraph& g, int cap = kDefaultCanonicalCap);

}  // namespace covpoly
