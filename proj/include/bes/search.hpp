#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

struct SearchResult {
    bool found = false;
    std::vector<std::string> witness_vertices;  // span of the witness edges
    std::vector<LabelEdge> witness_edges;
    std::uint64_t nodes_explored = 0;
};

constexpr std::size_t kMaxSearchEdges = 60;
constexpr std::size_t kMaxSearchVertices = 20;

struct SearchOptions {
    unsigned workers = 1;
};

// Does h contain e edges spanning at most v vertices? Depth-first over edge
// subsets in lexicographic order of edge indices; the witness is the first
// qualifying subset in that order.
SearchResult find_configuration(const Hypergraph& h, long v, long e, const SearchOptions& opt = {});

struct CopyCount {
    std::uint64_t embeddings = 0;
    std::uint64_t automorphisms = 0;
    std::uint64_t copies = 0;  // embeddings / automorphisms
};

constexpr std::size_t kMaxPatternVertices = 14;
constexpr std::size_t kMaxCopyHostVertices = 64;

// Injective vertex maps sending every pattern edge onto a host edge. With
// induced = true the image must induce exactly e(pattern) host edges.
CopyCount count_copies(const Hypergraph& host, const Hypergraph& pattern, bool induced = false);

// True iff `map` (pattern label -> host label) is injective and sends every
// pattern edge onto a host edge.
bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern,
                      const std::map<std::string, std::string>& map);
bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern, const std::vector<VertexId>& image);

} // namespace bes
