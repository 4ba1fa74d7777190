#pragma once

#include <string>
#include <vector>

#include "bes/configuration.hpp"
#include "bes/hypergraph.hpp"

namespace bes {

// Map from the vertices of G_level (in its own vertex order) into the top
// level of a chain.
struct Embedding {
    int level = 0;
    std::vector<VertexId> image;
};

// A copy of G_target inside G_ell whose x_1..x_{k-1} and y_0..y_target are the
// corresponding spine vertices of G_ell. It lives inside the sub-copy
// G_{ell-1}^k, recursing through the k-th sub-copies.
Embedding locate_subcopy(const GChain& chain, int target);

enum class ExtractionStep {
    Empty,    // t = 0
    Whole,    // level 0, t = 1: one base copy
    Descend,  // t fits in G_{level-1}: recurse into sub-copy 1
    Split,    // G^level, d full sub-copies, and a residual t'
};

std::string step_name(ExtractionStep s);

struct ExtractionRecord {
    ExtractionStep step = ExtractionStep::Empty;
    int level = 0;
    long long t = 0;
    long long d = 0;              // Split only
    long long residual = 0;       // t', Split only
    int descent_level = -1;       // ell' for the residual, -1 when t' = 0
};

struct ExtractionResult {
    Hypergraph subgraph;
    std::vector<ExtractionRecord> trace;
    DifferenceReport verified;
};

// Sub-configuration of the chain's top level with exactly t * e(G) edges and
// difference at most k + ell. When t > e(G_{ell-1}) / e(G) it contains A_ell.
ExtractionResult extract(const GChain& chain, long long t);

} // namespace bes
