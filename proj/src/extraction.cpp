#include "bes/extraction.hpp"

#include <algorithm>

namespace bes {

std::string step_name(ExtractionStep s) {
    switch (s) {
    case ExtractionStep::Empty: return "empty";
    case ExtractionStep::Whole: return "whole";
    case ExtractionStep::Descend: return "descend";
    case ExtractionStep::Split: return "split";
    }
    return "?";
}

namespace {

std::vector<VertexId> compose(const std::vector<VertexId>& outer, const std::vector<VertexId>& inner) {
    std::vector<VertexId> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

std::vector<VertexId> identity(std::size_t n) {
    std::vector<VertexId> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<VertexId>(i);
    return out;
}

// Image of G_target inside G_level (level > target), in G_level's own indices.
std::vector<VertexId> locate_within(const GChain& chain, int level, int target) {
    const auto& sub = chain.levels[level].subcopy(g_subcopy_name(level - 1, chain.k));
    if (target == level - 1) return sub.image;
    return compose(sub.image, locate_within(chain, level - 1, target));
}

struct Collector {
    const GChain& chain;
    std::vector<bool> vertices;
    std::vector<Edge> edges;
    std::vector<ExtractionRecord> trace;

    // Adds the whole copy of `tmpl` placed by `map` into the top level.
    void add_copy(const Hypergraph& tmpl, const std::vector<VertexId>& map) {
        for (auto v : map) vertices[v] = true;
        for (const auto& e : tmpl.edges()) {
            Edge m;
            for (auto v : e) m.push_back(map[v]);
            std::sort(m.begin(), m.end());
            edges.push_back(std::move(m));
        }
    }

    void run(int level, long long t, const std::vector<VertexId>& map) {
        ExtractionRecord rec;
        rec.level = level;
        rec.t = t;
        if (t == 0) {
            rec.step = ExtractionStep::Empty;
            trace.push_back(rec);
            return;
        }
        if (level == 0) {
            rec.step = ExtractionStep::Whole;
            trace.push_back(rec);
            add_copy(chain.levels[0].graph, map);
            return;
        }
        const auto& g = chain.levels[level];
        const long long stride = chain.weight(level - 1);  // (k^level - 1) / (k - 1)
        if (t <= stride) {
            rec.step = ExtractionStep::Descend;
            trace.push_back(rec);
            run(level - 1, t, compose(map, g.subcopy(g_subcopy_name(level - 1, 1)).image));
            return;
        }
        rec.step = ExtractionStep::Split;
        rec.d = (t - 1) / stride;
        rec.residual = t - rec.d * stride - 1;
        if (rec.residual > 0) {
            int target = 0;
            while (chain.weight(target) < rec.residual) ++target;
            rec.descent_level = target;
        }
        trace.push_back(rec);

        add_copy(chain.base.graph, compose(map, g.subcopy(g_base_copy_name(level)).image));
        for (long long i = 1; i <= rec.d; ++i)
            add_copy(chain.levels[level - 1].graph,
                     compose(map, g.subcopy(g_subcopy_name(level - 1, static_cast<int>(i))).image));
        if (rec.residual > 0)
            run(rec.descent_level, rec.residual, compose(map, locate_within(chain, level, rec.descent_level)));
    }
};

} // namespace

Embedding locate_subcopy(const GChain& chain, int target) {
    const int ell = chain.ell();
    if (target < 0 || target >= ell)
        throw Error("locate_subcopy needs 0 <= ell' < ell = " + std::to_string(ell) + ", got " +
                    std::to_string(target));
    return {target, locate_within(chain, ell, target)};
}

ExtractionResult extract(const GChain& chain, long long t) {
    const int ell = chain.ell();
    const long long max_t = chain.weight(ell);
    if (t < 0 || t > max_t)
        throw Error("t must lie in [0, " + std::to_string(max_t) + "], got " + std::to_string(t));

    const auto& top = chain.top().graph;
    Collector c{chain, std::vector<bool>(top.vertex_count(), false), {}, {}};
    c.run(ell, t, identity(top.vertex_count()));

    std::vector<VertexId> remap(top.vertex_count(), 0);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < top.vertex_count(); ++v) {
        if (!c.vertices[v]) continue;
        remap[v] = static_cast<VertexId>(labels.size());
        labels.push_back(top.label(v));
    }
    for (auto& e : c.edges)
        for (auto& v : e) v = remap[v];

    ExtractionResult out;
    // Pieces are edge-disjoint by construction; a repeated edge is a bug and
    // from_ids rejects it.
    out.subgraph = Hypergraph::from_ids(3, std::move(labels), std::move(c.edges));
    out.trace = std::move(c.trace);
    out.verified = difference(out.subgraph, out.subgraph.full_set());
    return out;
}

} // namespace bes
