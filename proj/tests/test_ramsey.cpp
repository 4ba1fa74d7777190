#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bes/json_io.hpp"
#include "bes/ramsey.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

int pairs(int n) { return n * (n - 1) / 2; }

ColoringInstance rainbow(int n) {
    std::vector<long> c(static_cast<std::size_t>(pairs(n)));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i);
    return ColoringInstance(n, c);
}

ColoringInstance with_repeats(int n, const std::vector<std::pair<std::array<int, 2>, long>>& fixed) {
    auto base = rainbow(n);
    auto c = base.colors();
    for (const auto& [pair, color] : fixed) c[base.pair_index(pair[0], pair[1])] = color;
    return ColoringInstance(n, c);
}

// Minimum over all p-sets of the number of distinct colors, by brute force.
int naive_min_colors(const ColoringInstance& c, int p) {
    const int n = c.n();
    int best = -1;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        if (std::popcount(bits) != p) continue;
        std::set<long> seen;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (((bits >> (i - 1)) & 1) && ((bits >> (j - 1)) & 1)) seen.insert(c.color(i, j));
        if (best < 0 || static_cast<int>(seen.size()) < best) best = static_cast<int>(seen.size());
    }
    return best;
}

ColoringInstance random_coloring(std::mt19937_64& rng, int n, long palette) {
    std::vector<long> c(static_cast<std::size_t>(pairs(n)));
    for (auto& x : c) x = static_cast<long>(rng() % static_cast<std::uint64_t>(palette));
    return ColoringInstance(n, c);
}

} // namespace

TEST_CASE("q_quad values and monotonicity") {
    CHECK(q_quad(4) == 6);
    CHECK(q_quad(8) == 26);
    CHECK(q_quad(10) == 42);
    for (int p = 4; p < 60; ++p) CHECK(q_quad(p + 1) > q_quad(p));
    CHECK_THROWS_AS(q_quad(3), Error);
}

TEST_CASE("pair indexing") {
    ColoringInstance c = rainbow(5);
    CHECK(c.pair_index(1, 2) == 0);
    CHECK(c.pair_index(1, 5) == 3);
    CHECK(c.pair_index(2, 3) == 4);
    CHECK(c.pair_index(5, 4) == 9);
    for (std::size_t i = 0; i < 10; ++i) {
        auto p = c.pair_at(i);
        CHECK(c.pair_index(p[0], p[1]) == i);
    }
    CHECK_THROWS_AS(c.pair_index(0, 1), Error);
    CHECK_THROWS_AS(c.pair_index(2, 2), Error);
    CHECK_THROWS_AS(ColoringInstance(4, {1, 2, 3}), Error);
}

TEST_CASE("check_coloring basics") {
    auto r = check_coloring(rainbow(6), 4, 6);
    CHECK(r.valid);
    CHECK(r.min_colors == 6);
    auto mono = ColoringInstance(6, std::vector<long>(15, 0));
    auto m = check_coloring(mono, 4, 2);
    CHECK_FALSE(m.valid);
    CHECK(m.min_colors == 1);
    CHECK(m.witness_kp == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(check_coloring(rainbow(6), 7, 2), Error);
}

TEST_CASE("K_10 with a few repeated colors, p = 10, q = 43") {
    auto two = with_repeats(10, {{{1, 2}, 100}, {{3, 4}, 100}, {{5, 6}, 101}, {{7, 8}, 101}});
    auto r2 = check_coloring(two, 10, 43);
    CHECK(r2.min_colors == 43);
    CHECK(r2.valid);
    auto three = with_repeats(10, {{{1, 2}, 100}, {{3, 4}, 100}, {{5, 6}, 101}, {{7, 8}, 101}, {{9, 10}, 100}});
    auto r3 = check_coloring(three, 10, 43);
    CHECK(r3.min_colors == 42);
    CHECK_FALSE(r3.valid);
}

TEST_CASE("check_coloring matches brute force") {
    std::mt19937_64 rng(6);
    for (int round = 0; round < 80; ++round) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const int p = 3 + static_cast<int>(rng() % (n - 2));
        auto c = random_coloring(rng, n, 3 + static_cast<long>(rng() % 20));
        CHECK(check_coloring(c, p, 1).min_colors == naive_min_colors(c, p));
    }
}

TEST_CASE("coloring to 4-graph") {
    SUBCASE("rainbow gives nothing") { CHECK(coloring_to_4graph(rainbow(7)).graph.edge_count() == 0); }
    SUBCASE("one disjoint repeat") {
        auto g = coloring_to_4graph(with_repeats(6, {{{1, 2}, 50}, {{3, 4}, 50}}));
        REQUIRE(g.graph.edge_count() == 1);
        CHECK(g.graph.canonical_edges()[0] == LabelEdge{"1", "2", "3", "4"});
    }
    SUBCASE("intersecting repeat is skipped") {
        auto g = coloring_to_4graph(with_repeats(6, {{{1, 2}, 50}, {{1, 3}, 50}}));
        CHECK(g.graph.edge_count() == 0);
    }
    SUBCASE("first disjoint pair in pair order") {
        auto g = coloring_to_4graph(with_repeats(6, {{{1, 2}, 50}, {{1, 3}, 50}, {{2, 3}, 50}, {{4, 5}, 50}}));
        REQUIRE(g.graph.edge_count() == 1);
        CHECK(g.graph.canonical_edges()[0] == LabelEdge{"1", "2", "4", "5"});
    }
    SUBCASE("repeated 4-sets are merged and logged") {
        auto g = coloring_to_4graph(with_repeats(6, {{{1, 2}, 50}, {{3, 4}, 50}, {{1, 3}, 60}, {{2, 4}, 60}}));
        CHECK(g.graph.edge_count() == 1);
        REQUIRE(g.log.size() == 2);
        CHECK_FALSE(g.log[0].duplicate_of);
        REQUIRE(g.log[1].duplicate_of);
        CHECK(*g.log[1].duplicate_of == 50);
    }
    SUBCASE("deterministic") {
        std::mt19937_64 rng(1);
        auto c = random_coloring(rng, 9, 12);
        CHECK(coloring_to_4graph(c).graph == coloring_to_4graph(c).graph);
    }
}

TEST_CASE("implication on the packed construction") {
    // Color a on a perfect matching of {1..8}, color b on {1,3},{5,7}.
    auto c = with_repeats(10, {{{1, 2}, 900}, {{3, 4}, 900}, {{5, 6}, 900}, {{7, 8}, 900},
                               {{1, 3}, 901}, {{5, 7}, 901}});
    auto r = verify_implication(c, 8, 27);
    CHECK(r.e == 2);
    CHECK(r.configuration_found);
    CHECK_FALSE(r.coloring_valid);
    CHECK(r.holds);
    CHECK(check_coloring(c, 8, 27).min_colors <= 24);
}

TEST_CASE("implication on random colorings") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 100; ++round) {
        auto c = random_coloring(rng, 10, 20 + static_cast<long>(rng() % 40));
        auto r = verify_implication(c, 8, 27);
        CHECK(r.holds);
    }
    auto vac = verify_implication(rainbow(10), 8, 27);
    CHECK_FALSE(vac.configuration_found);
    CHECK(vac.holds);
    CHECK_THROWS_AS(verify_implication(rainbow(13), 8, 27), Error);
    CHECK_THROWS_AS(verify_implication(rainbow(10), 3, 2), Error);
}

TEST_CASE("coloring JSON") {
    std::mt19937_64 rng(4);
    auto c = random_coloring(rng, 7, 9);
    auto back = coloring_from_json(parse_json(dump(coloring_to_json(c))));
    CHECK(back.colors() == c.colors());
    CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"n": 3, "colors": {"1,2": 0, "1,3": 1}})")), Error);
    CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"n": 3, "colors": {"1,2": 0, "1,3": 1, "2,3": 2, "3,2": 1}})")),
                    Error);
    CHECK_THROWS_AS(coloring_from_json(parse_json(R"({"n": 3, "colors": {"1-2": 0}})")), Error);
}
