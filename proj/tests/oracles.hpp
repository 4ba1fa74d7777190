#pragma once

// Deliberately slow reference implementations. They only use the label view
// of a hypergraph (canonical_edges) so they share no code paths with the
// bitmask kernels under test.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bes/hypergraph.hpp"

namespace oracle {

using Labels = std::set<std::string>;

inline std::size_t induced_edges(const bes::Hypergraph& h, const Labels& u) {
    std::size_t c = 0;
    for (const auto& e : h.canonical_edges()) {
        bool inside = true;
        for (const auto& x : e) inside = inside && u.count(x);
        c += inside;
    }
    return c;
}

inline long difference(const bes::Hypergraph& h, const Labels& u) {
    return static_cast<long>(u.size()) - static_cast<long>(induced_edges(h, u));
}

inline Labels from_bits(const bes::Hypergraph& h, std::uint64_t bits) {
    Labels u;
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        if ((bits >> i) & 1) u.insert(h.labels()[i]);
    return u;
}

// The two subset rules for witness A, read straight off their definition.
inline bool nice_by_definition(const bes::Hypergraph& h, const Labels& a) {
    const long k = h.delta();
    if (static_cast<long>(a.size()) != k + 1) return false;
    if (induced_edges(h, a) != 0) return false;
    const std::uint64_t n = h.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        auto u = from_bits(h, bits);
        long in_a = 0;
        bool outside = false;
        for (const auto& x : u) {
            if (a.count(x))
                ++in_a;
            else
                outside = true;
        }
        const bool contains_a = in_a == static_cast<long>(a.size());
        const long d = difference(h, u);
        if (d < in_a - (contains_a ? 1 : 0)) return false;
        if (in_a <= k - 1 && outside && d < in_a + 1) return false;
    }
    return true;
}

// First e-subset of edges (lexicographic in edge index) spanning at most v
// vertices, with no pruning at all.
inline std::optional<std::vector<std::size_t>> scan_configuration(const bes::Hypergraph& h, long v, long e) {
    const std::size_t m = h.edge_count();
    if (e <= 0) return v >= 0 ? std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{}) : std::nullopt;
    if (static_cast<std::size_t>(e) > m) return std::nullopt;
    std::vector<std::size_t> c(static_cast<std::size_t>(e));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    const auto edges = h.edges();
    while (true) {
        std::set<bes::VertexId> span;
        for (auto i : c) span.insert(edges[i].begin(), edges[i].end());
        if (static_cast<long>(span.size()) <= v) return c;
        std::size_t i = c.size();
        while (i-- > 0 && c[i] == m - c.size() + i) {
        }
        if (i == static_cast<std::size_t>(-1)) return std::nullopt;
        ++c[i];
        for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
    }
}

// Injective maps pattern -> host sending edges onto edges, by trying every
// ordered selection of host vertices.
inline std::uint64_t count_embeddings(const bes::Hypergraph& host, const bes::Hypergraph& pattern) {
    std::set<Labels> host_edges;
    for (const auto& e : host.canonical_edges()) host_edges.insert(Labels(e.begin(), e.end()));
    const std::size_t n = host.vertex_count();
    const std::size_t p = pattern.vertex_count();
    std::uint64_t count = 0;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    // Every permutation of the host restricted to its first p entries gives
    // each ordered selection (n - p)! times.
    std::uint64_t repeat = 1;
    for (std::size_t i = 2; i <= n - p; ++i) repeat *= i;
    do {
        bool ok = true;
        for (const auto& e : pattern.edges()) {
            Labels img;
            for (auto x : e) img.insert(host.labels()[perm[x]]);
            if (!host_edges.count(img)) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count / repeat;
}

inline bes::Hypergraph complete(int r, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
    std::vector<bes::Edge> edges;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
        bes::Edge e;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) e.push_back(static_cast<bes::VertexId>(i));
        edges.push_back(e);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return bes::Hypergraph::from_ids(r, labels, edges);
}

// Random r-graph with n vertices and up to m distinct edges.
inline bes::Hypergraph random_graph(std::mt19937_64& rng, int r, int n, int m) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
    std::set<bes::Edge> edges;
    std::vector<bes::VertexId> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<bes::VertexId>(i);
    for (int tries = 0; tries < 20 * m && static_cast<int>(edges.size()) < m; ++tries) {
        std::shuffle(pool.begin(), pool.end(), rng);
        bes::Edge e(pool.begin(), pool.begin() + r);
        std::sort(e.begin(), e.end());
        edges.insert(e);
    }
    return bes::Hypergraph::from_ids(r, labels, std::vector<bes::Edge>(edges.begin(), edges.end()));
}

} // namespace oracle
