#include "bes/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace bes {

namespace {

class ConfigSearch {
public:
    ConfigSearch(const Hypergraph& h, long v, long e)
        : h_(h), v_(v), e_(e), words_(std::max<std::size_t>(1, (h.vertex_count() + 63) / 64)),
          masks_(h.edge_count() * words_, 0), spans_(static_cast<std::size_t>(e + 1) * words_, 0),
          chosen_(static_cast<std::size_t>(e)) {
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            for (auto x : h.edges()[i]) masks_[i * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    }

    // Explores the subtree whose first chosen edge is `root`.
    bool run_root(std::size_t root) {
        nodes_ = 0;
        return extend(0, root, root + 1);
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::size_t>& chosen() const { return chosen_; }

private:
    std::size_t added(std::size_t depth, std::size_t edge) const {
        const std::uint64_t* s = &spans_[depth * words_];
        const std::uint64_t* m = &masks_[edge * words_];
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(m[w] & ~s[w]));
        return c;
    }

    // Place edge `edge` at position `depth`; candidates for the next
    // position start at `next`.
    bool extend(std::size_t depth, std::size_t edge, std::size_t next) {
        ++nodes_;
        const std::uint64_t* s = &spans_[depth * words_];
        std::uint64_t* t = &spans_[(depth + 1) * words_];
        const std::uint64_t* m = &masks_[edge * words_];
        long span = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            t[w] = s[w] | m[w];
            span += std::popcount(t[w]);
        }
        if (span > v_) return false;
        chosen_[depth] = edge;
        const std::size_t need = static_cast<std::size_t>(e_) - depth - 1;
        if (need == 0) return true;
        const std::size_t m_edges = h_.edge_count();
        if (m_edges - next < need) return false;

        // The next edge adds at least min_new vertices; later ones add >= 0.
        std::size_t min_new = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = next; i < m_edges && min_new > 0; ++i) min_new = std::min(min_new, added(depth + 1, i));
        if (span + static_cast<long>(min_new) > v_) return false;

        for (std::size_t i = next; i + need <= m_edges; ++i)
            if (extend(depth + 1, i, i + 1)) return true;
        return false;
    }

    const Hypergraph& h_;
    long v_, e_;
    std::size_t words_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> spans_;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
};

SearchResult witness_result(const Hypergraph& h, const std::vector<std::size_t>& chosen, std::uint64_t nodes) {
    SearchResult r;
    r.found = true;
    r.nodes_explored = nodes;
    std::vector<bool> used(h.vertex_count(), false);
    for (auto i : chosen) {
        LabelEdge le;
        for (auto x : h.edges()[i]) {
            used[x] = true;
            le.push_back(h.label(x));
        }
        std::sort(le.begin(), le.end());
        r.witness_edges.push_back(std::move(le));
    }
    for (VertexId x = 0; x < h.vertex_count(); ++x)
        if (used[x]) r.witness_vertices.push_back(h.label(x));
    return r;
}

} // namespace

SearchResult find_configuration(const Hypergraph& h, long v, long e, const SearchOptions& opt) {
    if (h.edge_count() > kMaxSearchEdges && h.vertex_count() > kMaxSearchVertices)
        throw Error("configuration search limited to hosts with <= " + std::to_string(kMaxSearchEdges) +
                    " edges or <= " + std::to_string(kMaxSearchVertices) + " vertices");
    SearchResult none;
    none.nodes_explored = 1;
    if (e <= 0) {
        if (v < 0) return none;
        SearchResult r;
        r.found = true;
        r.nodes_explored = 1;
        return r;
    }
    if (static_cast<std::size_t>(e) > h.edge_count() || v < h.uniformity()) return none;

    const std::size_t roots = h.edge_count() - static_cast<std::size_t>(e) + 1;
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(roots)));

    std::vector<std::uint64_t> root_nodes(roots, 0);
    std::vector<std::vector<std::size_t>> root_witness(roots);
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{unset};

    auto work = [&](unsigned id) {
        ConfigSearch search(h, v, e);
        for (std::size_t r = id; r < roots; r += workers) {
            if (r > best.load()) return;
            const bool hit = search.run_root(r);
            root_nodes[r] = search.nodes();
            if (hit) {
                root_witness[r] = search.chosen();
                auto cur = best.load();
                while (r < cur && !best.compare_exchange_weak(cur, r)) {
                }
                return;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    // Node count of the sequential scan: every root up to the first hit.
    const std::size_t last = best.load() == unset ? roots - 1 : best.load();
    std::uint64_t nodes = 1;
    for (std::size_t r = 0; r <= last; ++r) nodes += root_nodes[r];
    if (best.load() == unset) {
        none.nodes_explored = nodes;
        return none;
    }
    return witness_result(h, root_witness[best.load()], nodes);
}

namespace {

class Embedder {
public:
    Embedder(const Hypergraph& host, const Hypergraph& pattern, bool induced)
        : host_(host), pattern_(pattern), induced_(induced) {
        const std::size_t n = pattern.vertex_count();
        // Order pattern vertices so each one closes as many edges as possible.
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> degree(n, 0);
        for (const auto& e : pattern.edges())
            for (auto x : e) ++degree[x];
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n;
            long best_score = -1;
            for (std::size_t x = 0; x < n; ++x) {
                if (placed[x]) continue;
                long score = 0;
                for (const auto& e : pattern.edges()) {
                    if (std::find(e.begin(), e.end(), x) == e.end()) continue;
                    for (auto y : e)
                        if (y != x && placed[y]) score += 4;
                }
                score = score * 64 + static_cast<long>(degree[x]);
                if (score > best_score) {
                    best_score = score;
                    best = x;
                }
            }
            placed[best] = true;
            order_.push_back(static_cast<VertexId>(best));
        }
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
        closing_.assign(n, {});
        for (std::size_t ei = 0; ei < pattern.edge_count(); ++ei) {
            std::size_t last = 0;
            for (auto x : pattern.edges()[ei]) last = std::max(last, position[x]);
            closing_[last].push_back(ei);
        }
        map_.assign(n, 0);
        used_.assign(host.vertex_count(), false);
    }

    std::uint64_t count() {
        total_ = 0;
        recurse(0);
        return total_;
    }

private:
    void recurse(std::size_t depth) {
        if (depth == order_.size()) {
            if (induced_) {
                VertexMask m(host_.vertex_count());
                for (auto x : map_) m.set(x);
                if (induced_edge_count(host_, m) != pattern_.edge_count()) return;
            }
            ++total_;
            return;
        }
        const VertexId pv = order_[depth];
        Edge probe;
        for (VertexId hv = 0; hv < host_.vertex_count(); ++hv) {
            if (used_[hv]) continue;
            map_[pv] = hv;
            bool ok = true;
            for (auto ei : closing_[depth]) {
                probe.clear();
                for (auto x : pattern_.edges()[ei]) probe.push_back(map_[x]);
                std::sort(probe.begin(), probe.end());
                if (!host_.has_edge(probe)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used_[hv] = true;
            recurse(depth + 1);
            used_[hv] = false;
        }
    }

    const Hypergraph& host_;
    const Hypergraph& pattern_;
    bool induced_;
    std::vector<VertexId> order_;
    std::vector<std::vector<std::size_t>> closing_;
    std::vector<VertexId> map_;
    std::vector<bool> used_;
    std::uint64_t total_ = 0;
};

} // namespace

CopyCount count_copies(const Hypergraph& host, const Hypergraph& pattern, bool induced) {
    if (host.uniformity() != pattern.uniformity()) throw Error("uniformity mismatch between host and pattern");
    if (pattern.vertex_count() > kMaxPatternVertices)
        throw Error("pattern limited to " + std::to_string(kMaxPatternVertices) + " vertices");
    if (host.vertex_count() > kMaxCopyHostVertices)
        throw Error("copy counting limited to hosts with " + std::to_string(kMaxCopyHostVertices) + " vertices");
    CopyCount c;
    c.embeddings = Embedder(host, pattern, induced).count();
    c.automorphisms = Embedder(pattern, pattern, false).count();
    c.copies = c.embeddings / c.automorphisms;
    return c;
}

bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern, const std::vector<VertexId>& image) {
    if (image.size() != pattern.vertex_count()) throw Error("embedding does not cover every pattern vertex");
    std::vector<bool> seen(host.vertex_count(), false);
    for (auto x : image) {
        if (x >= host.vertex_count()) throw Error("embedding maps outside the host");
        if (seen[x]) return false;
        seen[x] = true;
    }
    if (host.uniformity() != pattern.uniformity()) return false;
    Edge probe;
    for (const auto& e : pattern.edges()) {
        probe.clear();
        for (auto x : e) probe.push_back(image[x]);
        std::sort(probe.begin(), probe.end());
        if (!host.has_edge(probe)) return false;
    }
    return true;
}

bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern,
                      const std::map<std::string, std::string>& map) {
    std::vector<VertexId> image;
    image.reserve(pattern.vertex_count());
    for (const auto& l : pattern.labels()) {
        auto it = map.find(l);
        if (it == map.end()) throw Error("embedding has no image for pattern vertex '" + l + "'");
        image.push_back(host.index_of(it->second));
    }
    return verify_embedding(host, pattern, image);
}

} // namespace bes
