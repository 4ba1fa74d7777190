#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

// Edge coloring of K_n on vertices 1..n. colors[pair_index(i, j)] is the
// color of {i, j}.
class ColoringInstance {
public:
    ColoringInstance() = default;
    ColoringInstance(int n, std::vector<long> colors);

    int n() const noexcept { return n_; }
    long color(int i, int j) const { return colors_[pair_index(i, j)]; }
    const std::vector<long>& colors() const noexcept { return colors_; }

    std::size_t pair_index(int i, int j) const;  // 1 <= i != j <= n
    std::array<int, 2> pair_at(std::size_t index) const;

private:
    int n_ = 0;
    std::vector<long> colors_;
    std::vector<std::array<int, 2>> pairs_;
};

long long q_quad(int p);

struct RamseyReport {
    int p = 0;
    int q = 0;
    std::optional<long long> q_quad_value;  // defined for p >= 4
    int min_colors = 0;
    bool valid = false;  // every K_p sees at least q colors
    std::vector<int> witness_kp;  // first K_p attaining min_colors
};

constexpr int kMaxColoringVertices = 14;

RamseyReport check_coloring(const ColoringInstance& c, int p, int q);

struct ColorPairLog {
    long color = 0;
    std::array<int, 2> first{};
    std::array<int, 2> second{};
    std::array<int, 4> four_set{};
    std::optional<long> duplicate_of;  // earlier color that produced the same 4-set
};

struct FourGraph {
    Hypergraph graph;  // 4-uniform on labels "1".."n"
    std::vector<ColorPairLog> log;
};

// One 4-edge per color that has two disjoint edges: the union of the
// lexicographically first disjoint pair of that color.
FourGraph coloring_to_4graph(const ColoringInstance& c);

struct ImplicationReport {
    int p = 0;
    int q = 0;
    int e = 0;                // C(p,2) - q + 1
    bool configuration_found = false;
    bool coloring_valid = false;
    bool holds = false;       // !configuration_found || !coloring_valid
    std::optional<std::vector<std::string>> configuration_vertices;
};

constexpr int kMaxImplicationVertices = 12;

ImplicationReport verify_implication(const ColoringInstance& c, int p, int q);

} // namespace bes
