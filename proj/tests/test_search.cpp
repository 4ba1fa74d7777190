#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bes/configuration.hpp"
#include "bes/search.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::set<oracle::Labels> edge_sets(const std::vector<LabelEdge>& es) {
    std::set<oracle::Labels> out;
    for (const auto& e : es) out.insert(oracle::Labels(e.begin(), e.end()));
    return out;
}

} // namespace

TEST_CASE("configuration search examples") {
    auto k6 = oracle::complete(3, 6);
    auto all = find_configuration(k6, 6, 20);
    CHECK(all.found);
    CHECK(all.witness_edges.size() == 20);

    auto cycle = linear_three_cycle().graph;
    CHECK_FALSE(find_configuration(cycle, 5, 3).found);
    CHECK(find_configuration(cycle, 6, 3).found);

    auto f = f14().graph;
    auto whole = find_configuration(f, 14, 10);
    REQUIRE(whole.found);
    CHECK(whole.witness_vertices.size() == 14);
    CHECK(edge_sets(whole.witness_edges) == edge_sets(f.canonical_edges()));
}

TEST_CASE("degenerate parameters") {
    auto cycle = linear_three_cycle().graph;
    CHECK(find_configuration(cycle, 0, 0).found);
    CHECK_FALSE(find_configuration(cycle, 6, 4).found);
    CHECK_FALSE(find_configuration(cycle, 2, 1).found);
}

TEST_CASE("size guard") {
    std::mt19937_64 rng(1);
    auto big = oracle::random_graph(rng, 3, 30, 80);
    REQUIRE(big.edge_count() > kMaxSearchEdges);
    CHECK_THROWS_AS(find_configuration(big, 10, 3), Error);
    auto dense = oracle::complete(3, 9);  // 84 edges on 9 vertices is allowed
    CHECK(find_configuration(dense, 4, 4).found);
}

TEST_CASE("pruned search matches the unpruned scan") {
    std::mt19937_64 rng(17);
    int found = 0;
    for (int round = 0; round < 300; ++round) {
        const int r = 3 + static_cast<int>(rng() % 2);
        const int n = r + 1 + static_cast<int>(rng() % 8);
        auto h = oracle::random_graph(rng, r, n, 1 + static_cast<int>(rng() % 12));
        const long e = 1 + static_cast<long>(rng() % std::max<std::size_t>(1, h.edge_count()));
        const long v = r + static_cast<long>(rng() % static_cast<std::uint64_t>(n));
        auto got = find_configuration(h, v, e);
        auto want = oracle::scan_configuration(h, v, e);
        CHECK(got.found == want.has_value());
        if (got.found && want) {
            ++found;
            std::vector<LabelEdge> expect;
            for (auto i : *want) {
                LabelEdge le;
                for (auto x : h.edges()[i]) le.push_back(h.label(x));
                std::sort(le.begin(), le.end());
                expect.push_back(le);
            }
            CHECK(got.witness_edges == expect);
            std::set<std::string> span;
            for (const auto& le : got.witness_edges) span.insert(le.begin(), le.end());
            CHECK(static_cast<long>(span.size()) <= v);
            CHECK(span.size() == got.witness_vertices.size());
        }
    }
    CHECK(found > 0);
}

TEST_CASE("parallel search is deterministic") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        auto h = oracle::random_graph(rng, 3, 12, 30);
        const long e = 3 + static_cast<long>(rng() % 4);
        const long v = 5 + static_cast<long>(rng() % 4);
        auto seq = find_configuration(h, v, e);
        for (unsigned w : {2u, 4u, 7u}) {
            auto par = find_configuration(h, v, e, {w});
            CHECK(par.found == seq.found);
            CHECK(par.witness_edges == seq.witness_edges);
            CHECK(par.nodes_explored == seq.nodes_explored);
        }
    }
}

TEST_CASE("copy counts") {
    auto edge = Hypergraph::make(3, {"a", "b", "c"}, {{"a", "b", "c"}});
    CHECK(count_copies(oracle::complete(3, 4), edge).copies == 4);

    auto cycle = linear_three_cycle().graph;
    auto self = count_copies(cycle, cycle);
    CHECK(self.copies == 1);
    CHECK(self.automorphisms == 6);

    auto k6 = oracle::complete(3, 6);
    auto c = count_copies(k6, cycle);
    CHECK(c.embeddings == oracle::count_embeddings(k6, cycle));
    CHECK(c.embeddings == 720);
    CHECK(c.copies == 120);
}

TEST_CASE("closed forms on complete 3-graphs") {
    auto edge = Hypergraph::make(3, {"a", "b", "c"}, {{"a", "b", "c"}});
    auto pair = Hypergraph::make(3, {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}});
    auto three = Hypergraph::make(3, {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}});
    auto k4 = oracle::complete(3, 4);
    auto edge_plus = Hypergraph::make(3, {"a", "b", "c", "d"}, {{"a", "b", "c"}});
    for (int n = 4; n <= 9; ++n) {
        CAPTURE(n);
        auto kn = oracle::complete(3, n);
        CHECK(count_copies(kn, edge).copies == static_cast<std::uint64_t>(choose(n, 3)));
        CHECK(count_copies(kn, pair).copies == static_cast<std::uint64_t>(6 * choose(n, 4)));
        CHECK(count_copies(kn, three).copies == static_cast<std::uint64_t>(4 * choose(n, 4)));
        CHECK(count_copies(kn, k4).copies == static_cast<std::uint64_t>(choose(n, 4)));
        CHECK(count_copies(kn, edge_plus).copies == static_cast<std::uint64_t>(choose(n, 3) * (n - 3)));
        if (n <= 7) {
            for (const auto* p : {&edge, &pair, &three, &k4, &edge_plus})
                CHECK(count_copies(kn, *p).embeddings == oracle::count_embeddings(kn, *p));
        }
    }
}

TEST_CASE("copy counts match the naive enumerator on random hosts") {
    std::mt19937_64 rng(8);
    auto cycle = linear_three_cycle().graph;
    auto pair = Hypergraph::make(3, {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}});
    for (int round = 0; round < 30; ++round) {
        auto h = oracle::random_graph(rng, 3, 7, 5 + static_cast<int>(rng() % 25));
        CHECK(count_copies(h, cycle).embeddings == oracle::count_embeddings(h, cycle));
        CHECK(count_copies(h, pair).embeddings == oracle::count_embeddings(h, pair));
    }
}

TEST_CASE("induced copies") {
    auto edge = Hypergraph::make(3, {"a", "b", "c"}, {{"a", "b", "c"}});
    auto pair = Hypergraph::make(3, {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}});
    auto k4 = oracle::complete(3, 4);
    CHECK(count_copies(k4, edge, true).copies == 4);
    CHECK(count_copies(k4, pair, true).copies == 0);
    CHECK(count_copies(k4, pair, false).copies == 6);
}

TEST_CASE("copy counting guards") {
    auto edge4 = Hypergraph::make(4, {"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    CHECK_THROWS_AS(count_copies(oracle::complete(3, 5), edge4), Error);
    std::mt19937_64 rng(1);
    auto big_pattern = oracle::random_graph(rng, 3, 15, 3);
    CHECK_THROWS_AS(count_copies(oracle::complete(3, 16), big_pattern), Error);
}

TEST_CASE("embedding verification") {
    auto cycle = linear_three_cycle().graph;
    std::map<std::string, std::string> id;
    for (const auto& l : cycle.labels()) id[l] = l;
    CHECK(verify_embedding(cycle, cycle, id));
    auto collapsed = id;
    collapsed["v2"] = "v1";
    CHECK_FALSE(verify_embedding(cycle, cycle, collapsed));
    auto incomplete = id;
    incomplete.erase("v6");
    CHECK_THROWS_AS(verify_embedding(cycle, cycle, incomplete), Error);
    auto unknown = id;
    unknown["v6"] = "zz";
    CHECK_THROWS_AS(verify_embedding(cycle, cycle, unknown), Error);
    auto swapped = id;
    std::swap(swapped["v2"], swapped["v4"]);
    CHECK_FALSE(verify_embedding(cycle, cycle, swapped));
}
