#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

enum class ProjectionCase { HeavyTriple, Projected };

std::string projection_case_name(ProjectionCase c);

struct ProjectedLink {
    LabelEdge triple;  // T_Y, host vertex order
    LabelEdge link;    // Y, host vertex order
};

struct ProjectionResult {
    int r = 0;
    int k = 0;
    int e = 0;
    std::vector<std::string> anchors;  // v_1..v_{k-2}
    ProjectionCase case_tag = ProjectionCase::Projected;
    std::size_t link_count = 0;        // |E_0|

    // HeavyTriple: the triple and the configuration X_1..X_e around it.
    std::optional<LabelEdge> heavy_triple;
    std::optional<Hypergraph> heavy_config;

    // Projected: the 3-graph H' on V(H) and the T_Y <-> Y association for
    // every retained link (E_1, in greedy order).
    std::optional<Hypergraph> projected;
    std::vector<ProjectedLink> retained;
};

constexpr std::size_t kMaxProjectionVertices = 40;

ProjectionResult project(const Hypergraph& h, int k, int e);

// Lifts a sub-configuration of the projected 3-graph back to the r-graph:
// the result has edges Y + anchors for every T_Y in `config3`.
Hypergraph lift(const ProjectionResult& p, const Hypergraph& config3);

// Vertex bound a lifted configuration must satisfy.
long lift_vertex_bound(const ProjectionResult& p, const Hypergraph& config3);

} // namespace bes
