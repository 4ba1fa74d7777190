#include "bes/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace bes {

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool VertexSubset::belongs_to(const Hypergraph& host) const noexcept {
    return host_digest_ == host.vertex_digest() && mask_.size() == host.vertex_count();
}

std::vector<std::string> VertexSubset::labels(const Hypergraph& host) const {
    if (!belongs_to(host)) throw Error("vertex subset does not belong to this hypergraph");
    std::vector<std::string> out;
    for (auto i : mask_.indices()) out.push_back(host.label(static_cast<VertexId>(i)));
    return out;
}

Hypergraph Hypergraph::make(int r, std::vector<std::string> vertices,
                            const std::vector<LabelEdge>& edges) {
    if (r < 2) throw Error("uniformity must be at least 2");
    Hypergraph h;
    h.r_ = r;
    h.labels_ = std::move(vertices);
    h.index_.reserve(h.labels_.size());
    for (std::size_t i = 0; i < h.labels_.size(); ++i) {
        if (!h.index_.emplace(h.labels_[i], static_cast<VertexId>(i)).second)
            throw Error("duplicate vertex label '" + h.labels_[i] + "'");
    }
    h.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw Error("edge of size " + std::to_string(e.size()) + " in a " +
                        std::to_string(r) + "-uniform hypergraph");
        Edge ids;
        ids.reserve(e.size());
        for (const auto& l : e) {
            auto it = h.index_.find(l);
            if (it == h.index_.end()) throw Error("edge references unknown label '" + l + "'");
            ids.push_back(it->second);
        }
        h.edges_.push_back(std::move(ids));
    }
    h.finalize(false);
    return h;
}

Hypergraph Hypergraph::from_ids(int r, std::vector<std::string> vertices, std::vector<Edge> edges,
                                bool merge_duplicates) {
    if (r < 2) throw Error("uniformity must be at least 2");
    Hypergraph h;
    h.r_ = r;
    h.labels_ = std::move(vertices);
    h.index_.reserve(h.labels_.size());
    for (std::size_t i = 0; i < h.labels_.size(); ++i) {
        if (!h.index_.emplace(h.labels_[i], static_cast<VertexId>(i)).second)
            throw Error("duplicate vertex label '" + h.labels_[i] + "'");
    }
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw Error("edge of size " + std::to_string(e.size()) + " in a " +
                        std::to_string(r) + "-uniform hypergraph");
        for (auto v : e)
            if (v >= h.labels_.size()) throw Error("edge references vertex index out of range");
    }
    h.edges_ = std::move(edges);
    h.finalize(merge_duplicates);
    return h;
}

void Hypergraph::finalize(bool merge_duplicates) {
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error("edge repeats a vertex ('" + labels_[*std::adjacent_find(e.begin(), e.end())] +
                        "')");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        if (!merge_duplicates) {
            std::string text;
            for (auto v : *dup) text += (text.empty() ? "" : ",") + labels_[v];
            throw Error("duplicate edge {" + text + "}");
        }
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    small_masks_.clear();
    if (labels_.size() <= 64) {
        small_masks_.reserve(edges_.size());
        for (const auto& e : edges_) {
            std::uint64_t m = 0;
            for (auto v : e) m |= std::uint64_t{1} << v;
            small_masks_.push_back(m);
        }
    }

    std::uint64_t d = fnv1a64(std::to_string(labels_.size()));
    for (const auto& l : labels_) {
        d = fnv1a64(l, d);
        d = fnv1a64(std::string_view("\x1f", 1), d);
    }
    vertex_digest_ = d;
}

std::optional<VertexId> Hypergraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Hypergraph::index_of(std::string_view label) const {
    auto v = find(label);
    if (!v) throw Error("unknown vertex label '" + std::string(label) + "'");
    return *v;
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

std::vector<LabelEdge> Hypergraph::canonical_edges() const {
    std::vector<LabelEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        LabelEdge le;
        for (auto v : e) le.push_back(labels_[v]);
        std::sort(le.begin(), le.end());
        out.push_back(std::move(le));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSubset Hypergraph::subset(std::span<const std::string> labels) const {
    VertexMask m(vertex_count());
    for (const auto& l : labels) m.set(index_of(l));
    return {vertex_digest_, std::move(m)};
}

VertexSubset Hypergraph::subset(std::initializer_list<std::string> labels) const {
    return subset(std::span<const std::string>(labels.begin(), labels.size()));
}

VertexSubset Hypergraph::subset_of_ids(std::span<const VertexId> ids) const {
    VertexMask m(vertex_count());
    for (auto v : ids) {
        if (v >= vertex_count()) throw Error("vertex index out of range");
        m.set(v);
    }
    return {vertex_digest_, std::move(m)};
}

VertexSubset Hypergraph::subset_from_mask(VertexMask mask) const {
    if (mask.size() != vertex_count()) throw Error("mask length does not match vertex count");
    return {vertex_digest_, std::move(mask)};
}

VertexSubset Hypergraph::full_set() const {
    VertexMask m(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) m.set(i);
    return {vertex_digest_, std::move(m)};
}

VertexSubset Hypergraph::empty_set() const { return {vertex_digest_, VertexMask(vertex_count())}; }

Hypergraph make_hypergraph(int r, std::vector<std::string> vertices,
                           const std::vector<LabelEdge>& edges) {
    return Hypergraph::make(r, std::move(vertices), edges);
}

std::size_t induced_edge_count(const Hypergraph& h, const VertexMask& mask) {
    if (mask.size() != h.vertex_count()) throw Error("mask length does not match vertex count");
    std::size_t count = 0;
    auto small = h.small_edge_masks();
    if (!small.empty() || h.edge_count() == 0) {
        const std::uint64_t u = mask.word_count() ? mask.words()[0] : 0;
        for (auto e : small) count += (e & ~u) == 0;
        return count;
    }
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (auto v : e)
            if (!mask.test(v)) {
                inside = false;
                break;
            }
        count += inside;
    }
    return count;
}

DifferenceReport difference(const Hypergraph& h, const VertexSubset& u) {
    if (!u.belongs_to(h)) throw Error("vertex subset does not belong to this hypergraph");
    DifferenceReport r;
    r.subset_size = u.size();
    r.induced_edges = induced_edge_count(h, u.mask());
    r.delta = static_cast<long>(r.subset_size) - static_cast<long>(r.induced_edges);
    return r;
}

bool is_independent(const Hypergraph& h, const VertexSubset& a) {
    if (!a.belongs_to(h)) throw Error("vertex subset does not belong to this hypergraph");
    return induced_edge_count(h, a.mask()) == 0;
}

Hypergraph union_of(const Hypergraph& h1, const Hypergraph& h2) {
    if (h1.uniformity() != h2.uniformity()) throw Error("uniformity mismatch in union");
    std::vector<std::string> labels = h1.labels();
    std::unordered_map<std::string, VertexId> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<VertexId>(i));
    std::vector<VertexId> remap(h2.vertex_count());
    for (std::size_t i = 0; i < h2.vertex_count(); ++i) {
        auto [it, fresh] = index.emplace(h2.label(static_cast<VertexId>(i)),
                                         static_cast<VertexId>(labels.size()));
        if (fresh) labels.push_back(h2.label(static_cast<VertexId>(i)));
        remap[i] = it->second;
    }
    std::vector<Edge> edges = h1.edges();
    for (const auto& e : h2.edges()) {
        Edge m;
        for (auto v : e) m.push_back(remap[v]);
        edges.push_back(std::move(m));
    }
    return Hypergraph::from_ids(h1.uniformity(), std::move(labels), std::move(edges), true);
}

bool edge_disjoint(const Hypergraph& h1, const Hypergraph& h2) {
    if (h1.uniformity() != h2.uniformity()) throw Error("uniformity mismatch in edge_disjoint");
    auto a = h1.canonical_edges();
    auto b = h2.canonical_edges();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

Hypergraph induced_subgraph(const Hypergraph& h, const VertexSubset& u) {
    if (!u.belongs_to(h)) throw Error("vertex subset does not belong to this hypergraph");
    std::vector<VertexId> remap(h.vertex_count(), ~VertexId{0});
    std::vector<std::string> labels;
    for (auto i : u.mask().indices()) {
        remap[i] = static_cast<VertexId>(labels.size());
        labels.push_back(h.label(static_cast<VertexId>(i)));
    }
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
        Edge m;
        for (auto v : e) {
            if (remap[v] == ~VertexId{0}) break;
            m.push_back(remap[v]);
        }
        if (m.size() == e.size()) edges.push_back(std::move(m));
    }
    return Hypergraph::from_ids(h.uniformity(), std::move(labels), std::move(edges));
}

MaskKernel::MaskKernel(const Hypergraph& h)
    : vertices_(h.vertex_count()), words_((h.vertex_count() + 63) / 64), edges_(h.edge_count()) {
    if (words_ == 0) words_ = 1;
    masks_.assign(edges_ * words_, 0);
    for (std::size_t e = 0; e < edges_; ++e)
        for (auto v : h.edges()[e]) masks_[e * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

std::size_t MaskKernel::induced_edges(std::span<const std::uint64_t> subset) const noexcept {
    std::size_t count = 0;
    if (words_ == 1) {
        const std::uint64_t u = subset[0];
        for (std::size_t e = 0; e < edges_; ++e) count += (masks_[e] & ~u) == 0;
        return count;
    }
    for (std::size_t e = 0; e < edges_; ++e) {
        const std::uint64_t* m = &masks_[e * words_];
        bool inside = true;
        for (std::size_t w = 0; w < words_; ++w)
            if (m[w] & ~subset[w]) {
                inside = false;
                break;
            }
        count += inside;
    }
    return count;
}

} // namespace bes
