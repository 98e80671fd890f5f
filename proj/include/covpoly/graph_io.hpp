#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covpoly/graph.hpp"

namespace covpoly {

/// graph6 encoding of a simple graph (bit-exact per the format definition).
std::string graph6_encode(const Multigraph& g);

/// Decodes one graph6 line; an optional ">>graph6<<" prefix is skipped.
/// Malformed input raises ParseError carrying the byte offset.
Multigraph graph6_decode(std::string_view line);

/// One graph per line; blank lines and header prefixes are ignored.
std::vector<Multigraph> read_graph6_file(const std::string& path);

/// Plain-text edge list: first line "n m", then m lines of space-separated
/// vertex indices (1 index = loop, >= 3 indices = hyperedge). LF endings.
Hypergraph parse_edge_list(std::string_view text);

/// The multigraph view of parsed text; throws if a hyperedge is present.
Multigraph parse_edge_list_multigraph(std::string_view text);

std::string format_edge_list(const Multigraph& g);
std::string format_edge_list(const Hypergraph& g);

}  // namespace covpoly
