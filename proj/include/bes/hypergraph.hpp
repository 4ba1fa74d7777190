#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bes/error.hpp"
#include "bes/vertex_mask.hpp"

namespace bes {

using VertexId = std::uint32_t;
using Edge = std::vector<VertexId>;          // sorted ascending host indices
using LabelEdge = std::vector<std::string>;  // interchange form

class Hypergraph;

// A set of vertices of one particular host hypergraph.
class VertexSubset {
public:
    VertexSubset() = default;
    VertexSubset(std::uint64_t host_digest, VertexMask mask)
        : host_digest_(host_digest), mask_(std::move(mask)) {}

    std::uint64_t host_digest() const noexcept { return host_digest_; }
    const VertexMask& mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return mask_.count(); }
    bool contains(VertexId v) const noexcept { return mask_.test(v); }

    bool belongs_to(const Hypergraph& host) const noexcept;
    std::vector<std::string> labels(const Hypergraph& host) const;

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::uint64_t host_digest_ = 0;
    VertexMask mask_;
};

struct DifferenceReport {
    std::size_t subset_size = 0;
    std::size_t induced_edges = 0;
    long delta = 0;

    friend bool operator==(const DifferenceReport&, const DifferenceReport&) = default;
};

// Immutable r-uniform hypergraph. Vertex order is insertion order; edges are
// kept sorted (members ascending by host index, edges lexicographically).
class Hypergraph {
public:
    Hypergraph() = default;

    // Strict constructor: duplicate vertex labels, unknown labels, wrong-arity
    // edges and duplicate edges are all errors.
    static Hypergraph make(int r, std::vector<std::string> vertices,
                           const std::vector<LabelEdge>& edges);

    // Index-level constructor. With merge_duplicates, repeated edges collapse
    // silently; otherwise they are an error.
    static Hypergraph from_ids(int r, std::vector<std::string> vertices,
                               std::vector<Edge> edges, bool merge_duplicates = false);

    int uniformity() const noexcept { return r_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    long delta() const noexcept {
        return static_cast<long>(vertex_count()) - static_cast<long>(edge_count());
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    std::optional<VertexId> find(std::string_view label) const;
    VertexId index_of(std::string_view label) const;  // throws on unknown label

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool has_edge(const Edge& sorted_edge) const;

    // Single-word edge masks; populated only when vertex_count() <= 64.
    std::span<const std::uint64_t> small_edge_masks() const noexcept { return small_masks_; }

    // Edges in interchange form: labels sorted within an edge, edges sorted.
    std::vector<LabelEdge> canonical_edges() const;

    std::uint64_t vertex_digest() const noexcept { return vertex_digest_; }

    VertexSubset subset(std::span<const std::string> labels) const;
    VertexSubset subset(std::initializer_list<std::string> labels) const;
    VertexSubset subset_of_ids(std::span<const VertexId> ids) const;
    VertexSubset subset_from_mask(VertexMask mask) const;
    VertexSubset full_set() const;
    VertexSubset empty_set() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    void finalize(bool merge_duplicates);

    int r_ = 3;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> small_masks_;
    std::uint64_t vertex_digest_ = 0;
};

Hypergraph make_hypergraph(int r, std::vector<std::string> vertices,
                           const std::vector<LabelEdge>& edges);

// Number of edges lying entirely inside the mask.
std::size_t induced_edge_count(const Hypergraph& h, const VertexMask& mask);

DifferenceReport difference(const Hypergraph& h, const VertexSubset& u);
bool is_independent(const Hypergraph& h, const VertexSubset& a);

// Shared labels denote shared vertices; vertex order is h1's followed by the
// labels new in h2. Overlapping edges merge.
Hypergraph union_of(const Hypergraph& h1, const Hypergraph& h2);
bool edge_disjoint(const Hypergraph& h1, const Hypergraph& h2);

// Induced sub-hypergraph on the given vertices, keeping host order.
Hypergraph induced_subgraph(const Hypergraph& h, const VertexSubset& u);

// Flattened multiword edge masks for tight subset-scanning loops.
class MaskKernel {
public:
    explicit MaskKernel(const Hypergraph& h);

    std::size_t words() const noexcept { return words_; }
    std::size_t vertex_count() const noexcept { return vertices_; }
    std::size_t edge_count() const noexcept { return edges_; }

    std::size_t induced_edges(std::span<const std::uint64_t> subset) const noexcept;

private:
    std::size_t vertices_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> masks_;  // edge-major, words_ entries per edge
};

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace bes
