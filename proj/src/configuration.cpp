#include "bes/configuration.hpp"

#include <algorithm>
#include <unordered_map>

namespace bes {

std::string family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Custom: return "custom";
    case FamilyKind::LinearCycle: return "linear-cycle";
    case FamilyKind::F14: return "f14";
    case FamilyKind::Fk: return "f-k";
    case FamilyKind::Gell: return "g-ell";
    case FamilyKind::Edge: return "edge";
    }
    return "custom";
}

FamilyKind family_from_name(const std::string& name) {
    for (auto k : {FamilyKind::Custom, FamilyKind::LinearCycle, FamilyKind::F14, FamilyKind::Fk,
                   FamilyKind::Gell, FamilyKind::Edge})
        if (family_name(k) == name) return k;
    throw Error("unknown family tag '" + name + "'");
}

const std::vector<std::string>& LabeledConfiguration::role(const std::string& name) const {
    auto it = roles.find(name);
    if (it == roles.end()) throw Error("missing role '" + name + "'");
    return it->second;
}

const std::string& LabeledConfiguration::role_vertex(const std::string& name) const {
    const auto& r = role(name);
    if (r.size() != 1) throw Error("role '" + name + "' does not name a single vertex");
    return r.front();
}

VertexSubset LabeledConfiguration::role_set(const std::string& name) const {
    return graph.subset(role(name));
}

const Subcopy& LabeledConfiguration::subcopy(const std::string& name) const {
    for (const auto& s : subcopies)
        if (s.name == name) return s;
    throw Error("missing sub-copy '" + name + "'");
}

void LabeledConfiguration::validate() const {
    for (const auto& [name, labels] : roles) {
        if (labels.empty()) throw Error("role '" + name + "' is empty");
        for (const auto& l : labels)
            if (!graph.find(l)) throw Error("role '" + name + "' references unknown vertex '" + l + "'");
    }
    for (const auto& s : subcopies)
        for (auto v : s.image)
            if (v >= graph.vertex_count())
                throw Error("sub-copy '" + s.name + "' maps outside the host");
}

namespace {

// Incremental host under construction.
class Assembler {
public:
    VertexId add_vertex(const std::string& label) {
        auto [it, fresh] = index_.emplace(label, static_cast<VertexId>(labels_.size()));
        if (!fresh) throw Error("construction produced duplicate label '" + label + "'");
        labels_.push_back(label);
        return it->second;
    }

    VertexId id(const std::string& label) const { return index_.at(label); }

    // Adds a copy of `tmpl`. Template vertices listed in `anchors` map to the
    // given existing host labels; the rest become fresh vertices "prefix + label".
    std::vector<VertexId> add_copy(const Hypergraph& tmpl,
                                   const std::unordered_map<VertexId, std::string>& anchors,
                                   const std::string& prefix) {
        std::vector<VertexId> image(tmpl.vertex_count());
        for (VertexId v = 0; v < tmpl.vertex_count(); ++v) {
            auto it = anchors.find(v);
            image[v] = it != anchors.end() ? id(it->second) : add_vertex(prefix + tmpl.label(v));
        }
        for (const auto& e : tmpl.edges()) {
            Edge m;
            m.reserve(e.size());
            for (auto v : e) m.push_back(image[v]);
            edges_.push_back(std::move(m));
        }
        return image;
    }

    Hypergraph finish(int r) && {
        return Hypergraph::from_ids(r, std::move(labels_), std::move(edges_));
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Edge> edges_;
};

std::string xl(int i) { return "x" + std::to_string(i); }
std::string xpl(int i) { return "x'" + std::to_string(i); }
std::string yl(int i) { return "y" + std::to_string(i); }

} // namespace

LabeledConfiguration linear_three_cycle() {
    LabeledConfiguration c;
    c.graph = make_hypergraph(3, {"v1", "v2", "v3", "v4", "v5", "v6"},
                              {{"v1", "v2", "v5"}, {"v4", "v5", "v6"}, {"v1", "v3", "v6"}});
    for (int i = 1; i <= 6; ++i) c.roles["v" + std::to_string(i)] = {"v" + std::to_string(i)};
    c.roles["A"] = {"v1", "v2", "v3", "v4"};
    c.family = {FamilyKind::LinearCycle, 3, 0, {}};
    return c;
}

LabeledConfiguration f14() {
    LabeledConfiguration c;
    c.graph = make_hypergraph(
        3,
        {"w1", "w2", "w3", "w4", "w'1", "w'2", "w'3", "w'4", "x5", "x6", "y5", "y6", "z5", "z6"},
        {{"w1", "w2", "x5"},
         {"x5", "w'4", "x6"},
         {"x6", "w3", "w1"},
         {"x5", "w4", "y6"},
         {"y6", "w'3", "w1"},
         {"w1", "w'2", "y5"},
         {"y5", "w4", "x6"},
         {"w'1", "w2", "z5"},
         {"z5", "w4", "z6"},
         {"z6", "w3", "w'1"}});
    c.roles["A"] = {"w4", "w'1", "w'2", "w'3", "w'4"};
    // Listed as the images of v1..v6 of the linear 3-cycle.
    c.roles["V1"] = {"w'1", "w2", "w3", "w4", "z5", "z6"};
    c.roles["V2"] = {"w1", "w'2", "w3", "w4", "y5", "x6"};
    c.roles["V3"] = {"w1", "w2", "w'3", "w4", "x5", "y6"};
    c.roles["V4"] = {"w1", "w2", "w3", "w'4", "x5", "x6"};
    c.family = {FamilyKind::F14, 4, 0, {}};
    return c;
}

LabeledConfiguration single_edge() {
    LabeledConfiguration c;
    c.graph = make_hypergraph(3, {"a", "b", "c"}, {{"a", "b", "c"}});
    c.roles["A"] = {"a", "b", "c"};
    c.family = {FamilyKind::Edge, 2, 0, {}};
    return c;
}

LabeledConfiguration build_F(int k) {
    if (k < 4 || k > kMaxFk)
        throw Error("build_F needs 4 <= k <= " + std::to_string(kMaxFk) + ", got " + std::to_string(k));
    LabeledConfiguration current = f14();
    for (int next = 5; next <= k; ++next) {
        const auto& witness = current.role("A");
        const int m = next;  // |witness| of F_{next-1}
        if (static_cast<int>(witness.size()) != m) throw Error("F_k witness has wrong size");

        Assembler as;
        for (int i = 1; i <= m; ++i) as.add_vertex(xl(i));
        for (int i = 1; i <= m; ++i) as.add_vertex(xpl(i));

        std::vector<Subcopy> subcopies;
        for (int i = 1; i <= m; ++i) {
            std::unordered_map<VertexId, std::string> anchors;
            for (int j = 1; j <= m; ++j)
                anchors[current.graph.index_of(witness[j - 1])] = j == i ? xpl(i) : xl(j);
            auto image = as.add_copy(current.graph, anchors, "c" + std::to_string(i) + ".");
            subcopies.push_back({"F_" + std::to_string(i), "F_" + std::to_string(next - 1), std::move(image)});
        }

        LabeledConfiguration out;
        out.graph = std::move(as).finish(3);
        std::vector<std::string> a;
        for (int i = 1; i <= m; ++i) {
            out.roles["x" + std::to_string(i)] = {xl(i)};
            out.roles["xp" + std::to_string(i)] = {xpl(i)};
            a.push_back(xpl(i));
        }
        a.push_back(xl(1));
        out.roles["A"] = std::move(a);
        out.family = {FamilyKind::Fk, next, 0, {}};
        out.subcopies = std::move(subcopies);
        current = std::move(out);
    }
    return current;
}

long long predicted_G_edges(long long base_edges, int k, int ell) {
    long long weight = 0, power = 1;
    for (int j = 0; j <= ell; ++j) {
        weight += power;
        if (power > (1LL << 40) / std::max(k, 1)) return -1;
        power *= k;
    }
    return weight * base_edges;
}

long long GChain::weight(int j) const {
    long long w = 0, p = 1;
    for (int i = 0; i <= j; ++i) {
        w += p;
        p *= k;
    }
    return w;
}

std::string g_subcopy_name(int level, int i) {
    return "G_" + std::to_string(level) + "^" + std::to_string(i);
}

std::string g_base_copy_name(int ell) { return "G^" + std::to_string(ell); }

GChain build_G_chain(const LabeledConfiguration& base, int ell, const GOptions& options) {
    if (ell < 0) throw Error("ell must be non-negative");
    const long k = base.graph.delta();
    if (k < 2) throw Error("base must have difference at least 2");
    if (!base.has_role("A")) throw Error("base has no witness role 'A'");
    const auto& witness = base.role("A");
    if (static_cast<long>(witness.size()) != k + 1)
        throw Error("malformed witness: |A| = " + std::to_string(witness.size()) +
                    " but Delta(base) + 1 = " + std::to_string(k + 1));
    const auto a_set = base.role_set("A");
    if (a_set.size() != witness.size()) throw Error("malformed witness: repeated vertex");
    if (!options.allow_dependent_witness && !is_independent(base.graph, a_set))
        throw Error("malformed witness: A is not independent");

    const long long edges = predicted_G_edges(static_cast<long long>(base.graph.edge_count()),
                                              static_cast<int>(k), ell);
    if (edges < 0 || static_cast<unsigned long long>(edges + k + ell) > kMaxBuildVertices)
        throw Error("size guard: G_" + std::to_string(ell) + " would exceed " +
                    std::to_string(kMaxBuildVertices) + " vertices");

    // Split A into x_1..x_k and y_0.
    auto ordered = a_set.mask().indices();
    VertexId y0 = static_cast<VertexId>(ordered.back());
    if (options.y0) {
        auto v = base.graph.find(*options.y0);
        if (!v || !a_set.contains(*v)) throw Error("y0 '" + *options.y0 + "' is not a witness vertex");
        y0 = *v;
    }
    std::vector<VertexId> xs;
    for (auto v : ordered)
        if (v != y0) xs.push_back(static_cast<VertexId>(v));

    GChain chain;
    chain.base = base;
    chain.k = static_cast<int>(k);
    const std::string base_name = family_name(base.family.kind);

    LabeledConfiguration g0;
    g0.graph = base.graph;
    g0.roles["A"] = witness;
    std::vector<std::string> a_ell;
    for (int i = 1; i <= k; ++i) {
        g0.roles[xl(i)] = {base.graph.label(xs[i - 1])};
        a_ell.push_back(base.graph.label(xs[i - 1]));
    }
    g0.roles["y0"] = {base.graph.label(y0)};
    a_ell.push_back(base.graph.label(y0));
    g0.roles["A_ell"] = std::move(a_ell);
    g0.family = {FamilyKind::Gell, static_cast<int>(k), 0, base_name};
    chain.levels.push_back(std::move(g0));

    for (int level = 1; level <= ell; ++level) {
        const auto& prev = chain.levels.back();
        Assembler as;
        for (int i = 1; i <= k; ++i) as.add_vertex(xl(i));
        for (int j = 0; j <= level; ++j) as.add_vertex(yl(j));
        for (int i = 1; i <= k; ++i) as.add_vertex(xpl(i));

        std::vector<Subcopy> subcopies;
        for (int i = 1; i <= k; ++i) {
            std::unordered_map<VertexId, std::string> anchors;
            for (int j = 1; j <= k; ++j)
                anchors[prev.graph.index_of(prev.role_vertex(xl(j)))] = j == i ? xpl(i) : xl(j);
            for (int j = 0; j < level; ++j)
                anchors[prev.graph.index_of(prev.role_vertex(yl(j)))] = yl(j);
            auto image = as.add_copy(prev.graph, anchors, "c" + std::to_string(i) + ".");
            subcopies.push_back({g_subcopy_name(level - 1, i), "G_" + std::to_string(level - 1),
                                 std::move(image)});
        }
        {
            std::unordered_map<VertexId, std::string> anchors;
            for (int i = 1; i <= k; ++i) anchors[xs[i - 1]] = xl(i);
            anchors[y0] = yl(level);
            auto image = as.add_copy(base.graph, anchors, "c0.");
            subcopies.push_back({g_base_copy_name(level), "G", std::move(image)});
        }

        LabeledConfiguration g;
        g.graph = std::move(as).finish(3);
        std::vector<std::string> a_ell;
        for (int i = 1; i <= k; ++i) {
            g.roles[xl(i)] = {xl(i)};
            g.roles["xp" + std::to_string(i)] = {xpl(i)};
            a_ell.push_back(xl(i));
        }
        for (int j = 0; j <= level; ++j) {
            g.roles[yl(j)] = {yl(j)};
            a_ell.push_back(yl(j));
        }
        g.roles["A_ell"] = std::move(a_ell);
        g.family = {FamilyKind::Gell, static_cast<int>(k), level, base_name};
        g.subcopies = std::move(subcopies);
        chain.levels.push_back(std::move(g));
    }
    return chain;
}

LabeledConfiguration build_G(const LabeledConfiguration& base, int ell, const GOptions& options) {
    auto chain = build_G_chain(base, ell, options);
    return std::move(chain.levels.back());
}

} // namespace bes
