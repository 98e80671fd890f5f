#include "covpoly/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace covpoly {

namespace {

constexpr int kG6Base = 63;
constexpr std::string_view kG6Header = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Multigraph& g) {
    if (!g.simple()) throw NotSimpleError("graph6 encodes simple graphs only");
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Base + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(kG6Base + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kG6Base + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kG6Base + (n & 0x3f)));
    } else {
        throw InvalidSizeError("graph6 vertex count above supported range");
    }

    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : g.edges()) adj[static_cast<std::size_t>(e[0]) * n + e[1]] = 1;

    int group = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | adj[static_cast<std::size_t>(i) * n + j];
            if (++bits == 6) {
                out.push_back(static_cast<char>(kG6Base + group));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(kG6Base + (group << (6 - bits))));
    return out;
}

Multigraph graph6_decode(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kG6Header.size()) == kG6Header) pos = kG6Header.size();
    auto need = [&](std::size_t k) {
        if (pos + k > line.size()) throw ParseError("truncated graph6 data", line.size());
    };
    auto value = [&](std::size_t at) {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", at);
        return static_cast<int>(c) - kG6Base;
    };

    need(1);
    long n;
    if (static_cast<unsigned char>(line[pos]) == 126) {
        need(4);
        if (static_cast<unsigned char>(line[pos + 1]) == 126)
            throw ParseError("graph6 vertex count above supported range", pos);
        n = (static_cast<long>(value(pos + 1)) << 12) | (value(pos + 2) << 6) | value(pos + 3);
        pos += 4;
    } else {
        n = value(pos);
        pos += 1;
    }

    const long bits_needed = n * (n - 1) / 2;
    const long bytes_needed = (bits_needed + 5) / 6;
    need(static_cast<std::size_t>(bytes_needed));
    if (pos + static_cast<std::size_t>(bytes_needed) != line.size())
        throw ParseError("trailing bytes after graph6 data", pos + bytes_needed);

    std::vector<Multigraph::Edge> edges;
    long bit = 0;
    int group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) group = value(pos + bit / 6);
            if (group & (1 << (5 - bit % 6))) edges.push_back({i, j});
        }
    }
    if (bits_needed % 6 != 0) {
        int pad_bits = static_cast<int>(6 - bits_needed % 6);
        if (value(pos + bytes_needed - 1) & ((1 << pad_bits) - 1))
            throw ParseError("nonzero graph6 padding bits", pos + bytes_needed - 1);
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::vector<Multigraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 file: " + path);
    std::vector<Multigraph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line == kG6Header) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

Hypergraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;
    std::vector<Hypergraph::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError("expected header line 'n m'", lineno);
            std::string rest;
            if (ls >> rest) throw ParseError("unexpected tokens after 'n m'", lineno);
            continue;
        }
        Hypergraph::Edge e;
        long v;
        while (ls >> v) {
            if (v < 0 || v >= n) throw ParseError("vertex index out of range", lineno);
            e.push_back(static_cast<int>(v));
        }
        if (!ls.eof()) throw ParseError("malformed vertex index", lineno);
        if (e.empty()) throw ParseError("empty edge line", lineno);
        edges.push_back(std::move(e));
    }
    if (n < 0) throw ParseError("missing header line 'n m'", lineno);
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", got " +
                             std::to_string(edges.size()),
                         lineno);
    return Hypergraph(static_cast<int>(n), std::move(edges));
}

Multigraph parse_edge_list_multigraph(std::string_view text) {
    Hypergraph h = parse_edge_list(text);
    if (h.max_arity() > 2) throw ParseError("hyperedge in multigraph input", 0);
    return h.to_multigraph();
}

std::string format_edge_list(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        if (e[0] == e[1])
            out += std::to_string(e[0]) + "\n";
        else
            out += std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
    }
    return out;
}

std::string format_edge_list(const Hypergraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        std::string line;
        for (int v : e) {
            if (!line.empty()) line += " ";
            line += std::to_string(v);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace covpoly
