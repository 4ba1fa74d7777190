#include "bes/projection.hpp"

#include <algorithm>
#include <map>

namespace bes {

std::string projection_case_name(ProjectionCase c) {
    return c == ProjectionCase::HeavyTriple ? "HeavyTriple" : "Projected";
}

namespace {

bool next_combination(std::vector<VertexId>& c, std::size_t n) {
    const std::size_t s = c.size();
    for (std::size_t i = s; i-- > 0;) {
        if (c[i] < n - s + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::string> labels_of(const Hypergraph& h, const std::vector<VertexId>& ids) {
    std::vector<std::string> out;
    for (auto v : ids) out.push_back(h.label(v));
    return out;
}

std::size_t shared(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++c;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

// Sub-hypergraph of `h` on the given edges; vertices are the covered ones plus
// `extra`, in host order.
Hypergraph sub_on_edges(const Hypergraph& h, const std::vector<Edge>& edges, const std::vector<VertexId>& extra) {
    std::vector<bool> used(h.vertex_count(), false);
    for (const auto& e : edges)
        for (auto v : e) used[v] = true;
    for (auto v : extra) used[v] = true;
    std::vector<VertexId> remap(h.vertex_count(), 0);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (used[v]) {
            remap[v] = static_cast<VertexId>(labels.size());
            labels.push_back(h.label(v));
        }
    std::vector<Edge> mapped;
    for (const auto& e : edges) {
        Edge m;
        for (auto v : e) m.push_back(remap[v]);
        mapped.push_back(std::move(m));
    }
    return Hypergraph::from_ids(h.uniformity(), std::move(labels), std::move(mapped));
}

} // namespace

ProjectionResult project(const Hypergraph& h, int k, int e) {
    const int r = h.uniformity();
    if (k < 2 || k >= r) throw Error("projection needs 2 <= k < r");
    if (e < 2) throw Error("projection needs e >= 2");
    if (h.vertex_count() > kMaxProjectionVertices)
        throw Error("projection limited to " + std::to_string(kMaxProjectionVertices) + " vertices");

    ProjectionResult out;
    out.r = r;
    out.k = k;
    out.e = e;

    // Anchors: the (k-2)-set contained in the most edges; first in
    // lexicographic order on ties.
    const std::size_t a = static_cast<std::size_t>(k - 2);
    std::vector<VertexId> anchors;
    if (a > 0 && a <= h.vertex_count()) {
        std::vector<VertexId> comb(a);
        for (std::size_t i = 0; i < a; ++i) comb[i] = static_cast<VertexId>(i);
        std::size_t best = 0;
        bool first = true;
        do {
            std::size_t count = 0;
            for (const auto& ed : h.edges())
                count += std::includes(ed.begin(), ed.end(), comb.begin(), comb.end());
            if (first || count > best) {
                best = count;
                anchors = comb;
                first = false;
            }
        } while (next_combination(comb, h.vertex_count()));
    }
    out.anchors = labels_of(h, anchors);

    // E_0: links of the anchor set, in the host's canonical edge order.
    std::vector<Edge> links;
    for (const auto& ed : h.edges()) {
        if (!std::includes(ed.begin(), ed.end(), anchors.begin(), anchors.end())) continue;
        Edge y;
        std::set_difference(ed.begin(), ed.end(), anchors.begin(), anchors.end(), std::back_inserter(y));
        links.push_back(std::move(y));
    }
    out.link_count = links.size();

    // Triple -> indices of the links containing it.
    std::map<Edge, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& y = links[i];
        for (std::size_t p = 0; p < y.size(); ++p)
            for (std::size_t q = p + 1; q < y.size(); ++q)
                for (std::size_t s = q + 1; s < y.size(); ++s)
                    containing[{y[p], y[q], y[s]}].push_back(i);
    }
    for (const auto& [triple, ids] : containing) {
        if (ids.size() < static_cast<std::size_t>(e)) continue;
        out.case_tag = ProjectionCase::HeavyTriple;
        out.heavy_triple = labels_of(h, triple);
        std::vector<Edge> xs;
        for (int i = 0; i < e; ++i) {
            Edge x = links[ids[i]];
            x.insert(x.end(), anchors.begin(), anchors.end());
            std::sort(x.begin(), x.end());
            xs.push_back(std::move(x));
        }
        out.heavy_config = sub_on_edges(h, xs, {});
        const long bound = static_cast<long>(r - k) * e + k;
        if (static_cast<long>(out.heavy_config->vertex_count()) > bound)
            throw Error("internal: heavy-triple configuration exceeds its vertex bound");
        return out;
    }

    // Greedy conflict-free family E_1 (pairwise intersections <= 2).
    out.case_tag = ProjectionCase::Projected;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < links.size(); ++i) {
        bool ok = true;
        for (auto j : kept)
            if (shared(links[i], links[j]) > 2) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(i);
    }
    std::vector<Edge> triples;
    for (auto i : kept) {
        Edge t(links[i].begin(), links[i].begin() + 3);
        out.retained.push_back({labels_of(h, t), labels_of(h, links[i])});
        triples.push_back(std::move(t));
    }
    out.projected = Hypergraph::from_ids(3, h.labels(), std::move(triples));
    return out;
}

long lift_vertex_bound(const ProjectionResult& p, const Hypergraph& config3) {
    return static_cast<long>(config3.vertex_count()) +
           static_cast<long>(p.r - p.k - 1) * static_cast<long>(config3.edge_count()) + p.k - 2;
}

Hypergraph lift(const ProjectionResult& p, const Hypergraph& config3) {
    if (p.case_tag != ProjectionCase::Projected || !p.projected)
        throw Error("lift needs a projected result");
    if (config3.uniformity() != 3) throw Error("lift expects a 3-uniform configuration");

    std::map<LabelEdge, const ProjectedLink*> by_triple;
    for (const auto& l : p.retained) {
        auto key = l.triple;
        std::sort(key.begin(), key.end());
        by_triple[key] = &l;
    }

    std::vector<std::string> labels;
    std::map<std::string, VertexId> index;
    auto add = [&](const std::string& l) {
        auto [it, fresh] = index.emplace(l, static_cast<VertexId>(labels.size()));
        if (fresh) labels.push_back(l);
        return it->second;
    };
    for (const auto& a : p.anchors) add(a);
    for (const auto& l : config3.labels()) {
        if (!p.projected->find(l)) throw Error("configuration vertex '" + l + "' is not in the projection");
        add(l);
    }

    std::vector<Edge> edges;
    for (const auto& t : config3.canonical_edges()) {
        auto it = by_triple.find(t);
        if (it == by_triple.end()) throw Error("edge {" + t[0] + "," + t[1] + "," + t[2] + "} is not in the projection");
        Edge x;
        for (const auto& l : it->second->link) x.push_back(add(l));
        for (const auto& a : p.anchors) x.push_back(add(a));
        edges.push_back(std::move(x));
    }

    // Vertex order follows the projected host.
    std::vector<std::string> ordered;
    for (const auto& l : p.projected->labels())
        if (index.count(l)) ordered.push_back(l);
    std::map<std::string, VertexId> pos;
    for (std::size_t i = 0; i < ordered.size(); ++i) pos[ordered[i]] = static_cast<VertexId>(i);
    for (auto& e : edges)
        for (auto& v : e) v = pos.at(labels[v]);

    auto lifted = Hypergraph::from_ids(p.r, std::move(ordered), std::move(edges));
    if (static_cast<long>(lifted.vertex_count()) > lift_vertex_bound(p, config3))
        throw Error("internal: lifted configuration exceeds its vertex bound");
    return lifted;
}

} // namespace bes
