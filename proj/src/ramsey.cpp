#include "bes/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bes/search.hpp"

namespace bes {

ColoringInstance::ColoringInstance(int n, std::vector<long> colors) : n_(n), colors_(std::move(colors)) {
    if (n < 1) throw Error("coloring needs n >= 1");
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (colors_.size() != pairs)
        throw Error("coloring of K_" + std::to_string(n) + " needs " + std::to_string(pairs) +
                    " colors, got " + std::to_string(colors_.size()));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs_.push_back({i, j});
}

std::size_t ColoringInstance::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw Error("invalid pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
    // Pairs ordered (1,2),(1,3),...,(1,n),(2,3),...
    const std::size_t before = static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
}

std::array<int, 2> ColoringInstance::pair_at(std::size_t index) const { return pairs_.at(index); }

long long q_quad(int p) {
    if (p < 4) throw Error("q_quad needs p >= 4");
    const long long pp = p;
    return pp * (pp - 1) / 2 - pp / 2 + 2;
}

RamseyReport check_coloring(const ColoringInstance& c, int p, int q) {
    const int n = c.n();
    if (p < 2 || p > n || n > kMaxColoringVertices)
        throw Error("check_coloring needs 2 <= p <= n <= " + std::to_string(kMaxColoringVertices));

    // Dense color ids for a stamp array.
    std::map<long, int> dense;
    for (auto col : c.colors()) dense.emplace(col, static_cast<int>(dense.size()));
    std::vector<int> ids;
    ids.reserve(c.colors().size());
    for (auto col : c.colors()) ids.push_back(dense[col]);
    std::vector<std::uint32_t> stamp(dense.size(), 0);
    std::uint32_t round = 0;

    RamseyReport r;
    r.p = p;
    r.q = q;
    if (p >= 4) r.q_quad_value = q_quad(p);
    r.min_colors = -1;

    std::vector<int> sel(p);
    for (int i = 0; i < p; ++i) sel[i] = i + 1;
    while (true) {
        ++round;
        int distinct = 0;
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b) {
                auto id = ids[c.pair_index(sel[a], sel[b])];
                if (stamp[id] != round) {
                    stamp[id] = round;
                    ++distinct;
                }
            }
        if (r.min_colors < 0 || distinct < r.min_colors) {
            r.min_colors = distinct;
            r.witness_kp = sel;
        }
        int i = p - 1;
        while (i >= 0 && sel[i] == n - p + i + 1) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < p; ++j) sel[j] = sel[j - 1] + 1;
    }
    r.valid = r.min_colors >= q;
    return r;
}

FourGraph coloring_to_4graph(const ColoringInstance& c) {
    std::map<long, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < c.colors().size(); ++i) classes[c.colors()[i]].push_back(i);

    FourGraph out;
    std::map<std::array<int, 4>, long> produced;
    std::vector<Edge> edges;
    for (const auto& [color, members] : classes) {
        bool done = false;
        for (std::size_t a = 0; a < members.size() && !done; ++a)
            for (std::size_t b = a + 1; b < members.size() && !done; ++b) {
                auto e1 = c.pair_at(members[a]);
                auto e2 = c.pair_at(members[b]);
                if (e1[0] == e2[0] || e1[0] == e2[1] || e1[1] == e2[0] || e1[1] == e2[1]) continue;
                std::array<int, 4> four{e1[0], e1[1], e2[0], e2[1]};
                std::sort(four.begin(), four.end());
                ColorPairLog entry{color, e1, e2, four, std::nullopt};
                auto [it, fresh] = produced.emplace(four, color);
                if (fresh)
                    edges.push_back({static_cast<VertexId>(four[0] - 1), static_cast<VertexId>(four[1] - 1),
                                     static_cast<VertexId>(four[2] - 1), static_cast<VertexId>(four[3] - 1)});
                else
                    entry.duplicate_of = it->second;
                out.log.push_back(entry);
                done = true;
            }
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= c.n(); ++i) labels.push_back(std::to_string(i));
    out.graph = Hypergraph::from_ids(4, std::move(labels), std::move(edges));
    return out;
}

ImplicationReport verify_implication(const ColoringInstance& c, int p, int q) {
    if (c.n() > kMaxImplicationVertices)
        throw Error("implication check limited to n <= " + std::to_string(kMaxImplicationVertices));
    const int pairs = p * (p - 1) / 2;
    if (p < 4 || p > c.n() || q < 1 || q > pairs)
        throw Error("implication check needs 4 <= p <= n and 1 <= q <= C(p,2)");
    ImplicationReport r;
    r.p = p;
    r.q = q;
    r.e = pairs - q + 1;
    const auto h = coloring_to_4graph(c);
    const auto search = find_configuration(h.graph, p, r.e);
    r.configuration_found = search.found;
    if (search.found) r.configuration_vertices = search.witness_vertices;
    r.coloring_valid = check_coloring(c, p, q).valid;
    r.holds = !r.configuration_found || !r.coloring_valid;
    return r;
}

} // namespace bes
