#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bes/configuration.hpp"
#include "bes/json_io.hpp"
#include "bes/search.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Template graph for a sub-copy entry of a built F_k or G_ell.
const Hypergraph& template_of(const Subcopy& s, const std::vector<LabeledConfiguration>& f_by_k,
                              const GChain* chain) {
    if (s.template_name == "f14" || s.template_name == "F_4") return f_by_k[4].graph;
    if (s.template_name.rfind("F_", 0) == 0) return f_by_k.at(std::stoul(s.template_name.substr(2))).graph;
    REQUIRE(chain != nullptr);
    if (s.template_name == "G") return chain->base.graph;
    return chain->levels.at(std::stoul(s.template_name.substr(2))).graph;
}

void check_subcopies(const LabeledConfiguration& c, const std::vector<LabeledConfiguration>& f_by_k,
                     const GChain* chain) {
    std::vector<Hypergraph> parts;
    for (const auto& s : c.subcopies) {
        const auto& t = template_of(s, f_by_k, chain);
        REQUIRE(s.image.size() == t.vertex_count());
        CHECK(verify_embedding(c.graph, t, s.image));
        auto induced = induced_subgraph(c.graph, c.graph.subset_of_ids(s.image));
        CHECK(induced.edge_count() == t.edge_count());
        parts.push_back(induced);
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(edge_disjoint(parts[i], parts[j]));
}

} // namespace

TEST_CASE("linear 3-cycle") {
    auto c = linear_three_cycle();
    CHECK(c.graph.vertex_count() == 6);
    CHECK(c.graph.edge_count() == 3);
    CHECK(c.graph.delta() == 3);
    CHECK(is_independent(c.graph, c.graph.subset({"v1", "v2", "v3", "v4"})));
    CHECK(count_copies(c.graph, c.graph).copies == 1);
}

TEST_CASE("f14 basics") {
    auto c = f14();
    CHECK(c.graph.vertex_count() == 14);
    CHECK(c.graph.edge_count() == 10);
    CHECK(c.graph.delta() == 4);
    CHECK(c.role("A") == std::vector<std::string>{"w4", "w'1", "w'2", "w'3", "w'4"});
    CHECK(is_independent(c.graph, c.role_set("A")));
}

TEST_CASE("f14: V1..V4 each induce a linear 3-cycle in cycle order") {
    auto c = f14();
    auto cycle = linear_three_cycle();
    for (const char* name : {"V1", "V2", "V3", "V4"}) {
        CAPTURE(name);
        const auto& roles = c.role(name);
        REQUIRE(roles.size() == 6);
        std::map<std::string, std::string> map;
        for (int i = 0; i < 6; ++i) map["v" + std::to_string(i + 1)] = roles[static_cast<std::size_t>(i)];
        CHECK(verify_embedding(c.graph, cycle.graph, map));
        auto induced = induced_subgraph(c.graph, c.graph.subset(roles));
        CHECK(induced.edge_count() == 3);
        CHECK(count_copies(induced, cycle.graph).copies == 1);
    }
}

TEST_CASE("F_k sizes, witness and sub-copies") {
    std::vector<LabeledConfiguration> f_by_k(8);
    f_by_k[4] = build_F(4);
    CHECK(f_by_k[4] == f14());
    for (int k = 4; k <= 7; ++k) {
        CAPTURE(k);
        if (k > 4) f_by_k[static_cast<std::size_t>(k)] = build_F(k);
        const auto& f = f_by_k[static_cast<std::size_t>(k)];
        const auto e = static_cast<long long>(f.graph.edge_count());
        CHECK(e == 5 * factorial(k) / 12);
        CHECK(static_cast<long long>(f.graph.vertex_count()) == e + k);
        CHECK(f.graph.delta() == k);
        CHECK(f.role("A").size() == static_cast<std::size_t>(k + 1));
        CHECK(f.role_set("A").size() == static_cast<std::size_t>(k + 1));
        CHECK(is_independent(f.graph, f.role_set("A")));
        if (k > 4 && k <= 6) check_subcopies(f, f_by_k, nullptr);
    }
}

TEST_CASE("F_5 sub-copies meet exactly in the spine minus their own two slots") {
    auto f5 = build_F(5);
    REQUIRE(f5.subcopies.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            std::set<VertexId> a(f5.subcopies[i].image.begin(), f5.subcopies[i].image.end());
            std::set<std::string> common;
            for (auto v : f5.subcopies[j].image)
                if (a.count(v)) common.insert(f5.graph.label(v));
            std::set<std::string> expect;
            for (std::size_t m = 1; m <= 5; ++m)
                if (m != i + 1 && m != j + 1) expect.insert("x" + std::to_string(m));
            CHECK(common == expect);
        }
}

TEST_CASE("F_k range guard") {
    CHECK_THROWS_AS(build_F(3), Error);
    CHECK_THROWS_AS(build_F(9), Error);
}

TEST_CASE("G_ell over f14: sizes, difference and A_ell") {
    const long long expected[] = {10, 50, 210, 850};
    auto chain = build_G_chain(f14(), 3);
    REQUIRE(chain.ell() == 3);
    CHECK(chain.k == 4);
    for (int ell = 0; ell <= 3; ++ell) {
        CAPTURE(ell);
        const auto& g = chain.levels[static_cast<std::size_t>(ell)];
        CHECK(static_cast<long long>(g.graph.edge_count()) == expected[ell]);
        CHECK(static_cast<long long>(g.graph.edge_count()) == ((1LL << (2 * (ell + 1))) - 1) / 3 * 10);
        CHECK(g.graph.delta() == 4 + ell);
        CHECK(g.role("A_ell").size() == static_cast<std::size_t>(4 + ell + 1));
        CHECK(is_independent(g.graph, g.role_set("A_ell")));
        CHECK(chain.weight(ell) * 10 == expected[ell]);
    }
    CHECK(build_G(f14(), 1).graph.vertex_count() == 55);
    CHECK(build_G(f14(), 2).graph.vertex_count() == 216);
}

TEST_CASE("G_0 is the base with A relabeled as A_ell") {
    auto g0 = build_G(f14(), 0);
    CHECK(g0.graph == f14().graph);
    auto a = g0.role("A_ell");
    std::set<std::string> got(a.begin(), a.end());
    std::set<std::string> want{"w4", "w'1", "w'2", "w'3", "w'4"};
    CHECK(got == want);
    CHECK(g0.role_vertex("y0") == "w'4");
    CHECK(g0.role_vertex("x1") == "w4");
}

TEST_CASE("G_ell sub-copies embed their templates") {
    std::vector<LabeledConfiguration> none(8);
    none[4] = f14();
    auto chain = build_G_chain(f14(), 2);
    for (int ell = 1; ell <= 2; ++ell) {
        const auto& g = chain.levels[static_cast<std::size_t>(ell)];
        CHECK(g.subcopies.size() == 5);
        CHECK_NOTHROW(g.subcopy(g_base_copy_name(ell)));
        CHECK_NOTHROW(g.subcopy(g_subcopy_name(ell - 1, 4)));
        check_subcopies(g, none, &chain);
    }
}

TEST_CASE("G_ell y0 choice") {
    auto g = build_G(f14(), 1, GOptions{std::string("w4"), false});
    CHECK(g.graph.edge_count() == 50);
    CHECK(is_independent(g.graph, g.role_set("A_ell")));
    CHECK_THROWS_AS(build_G(f14(), 1, GOptions{std::string("w1"), false}), Error);
}

TEST_CASE("G_ell over a single edge needs the dependent-witness flag") {
    CHECK_THROWS_AS(build_G(single_edge(), 1), Error);
    GOptions o;
    o.allow_dependent_witness = true;
    for (int ell = 0; ell <= 3; ++ell) {
        auto g = build_G(single_edge(), ell, o);
        CHECK(static_cast<long long>(g.graph.edge_count()) == (1LL << (ell + 1)) - 1);
        CHECK(g.graph.delta() == 2 + ell);
    }
}

TEST_CASE("G_ell rejects malformed bases and oversize requests") {
    auto bad = f14();
    bad.roles["A"] = {"w4", "w'1", "w'2", "w'3"};
    CHECK_THROWS_AS(build_G(bad, 1), Error);
    auto dep = f14();
    auto first = dep.graph.canonical_edges().front();
    std::vector<std::string> a(first.begin(), first.end());
    for (const auto& l : dep.graph.labels())
        if (a.size() < 5 && std::find(a.begin(), a.end(), l) == a.end()) a.push_back(l);
    dep.roles["A"] = a;
    CHECK_THROWS_AS(build_G(dep, 1), Error);
    CHECK_THROWS_AS(build_G(f14(), 6), Error);
    CHECK_THROWS_AS(build_G(f14(), -1), Error);
}

TEST_CASE("builders are deterministic") {
    CHECK(serialize_configuration(build_F(6)) == serialize_configuration(build_F(6)));
    CHECK(serialize_configuration(build_G(f14(), 2)) == serialize_configuration(build_G(f14(), 2)));
}

TEST_CASE("configuration JSON round trip") {
    for (const auto& c : {linear_three_cycle(), f14(), build_F(5), build_G(f14(), 2)}) {
        auto back = parse_configuration(serialize_configuration(c));
        CHECK(back == c);
    }
}
