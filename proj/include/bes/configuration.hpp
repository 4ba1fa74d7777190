#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

enum class FamilyKind { Custom, LinearCycle, F14, Fk, Gell, Edge };

struct Family {
    FamilyKind kind = FamilyKind::Custom;
    int k = 0;          // difference of the family member (Fk) or of the base (Gell)
    int ell = 0;        // Gell only
    std::string base;   // Gell only: name of the base configuration

    friend bool operator==(const Family&, const Family&) = default;
};

std::string family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

// One sub-copy of a template inside a host: image[i] is the host vertex
// playing the role of the template's i-th vertex.
struct Subcopy {
    std::string name;
    std::string template_name;
    std::vector<VertexId> image;

    friend bool operator==(const Subcopy&, const Subcopy&) = default;
};

struct LabeledConfiguration {
    Hypergraph graph;
    // Role name -> vertex labels. Single-vertex roles ("x1", "y0", ...) hold
    // one label; set roles ("A", "A_ell") keep their construction order.
    std::map<std::string, std::vector<std::string>> roles;
    Family family;
    std::vector<Subcopy> subcopies;

    bool has_role(const std::string& name) const { return roles.count(name) != 0; }
    const std::vector<std::string>& role(const std::string& name) const;
    const std::string& role_vertex(const std::string& name) const;
    VertexSubset role_set(const std::string& name) const;
    const Subcopy& subcopy(const std::string& name) const;

    // Throws unless every role resolves to an existing vertex and every
    // sub-copy image lies in the host.
    void validate() const;

    friend bool operator==(const LabeledConfiguration&, const LabeledConfiguration&) = default;
};

// The (6,3)-configuration: v1..v6 with edges {v1,v2,v5},{v4,v5,v6},{v1,v3,v6}.
LabeledConfiguration linear_three_cycle();

// The (14,10)-configuration with witness A = {w4,w'1,w'2,w'3,w'4} and the four
// linear 3-cycles V1..V4 stored as roles in cycle order v1..v6.
LabeledConfiguration f14();

// A single 3-edge {a,b,c} with anchor set A = {a,b,c}.
LabeledConfiguration single_edge();

constexpr int kMaxFk = 8;
constexpr std::size_t kMaxBuildVertices = 10000;

// F_4 = f14(); F_k for k >= 5 glues k copies of F_{k-1} along the spine.
LabeledConfiguration build_F(int k);

struct GOptions {
    // Which witness member plays y_0. Default: the last member of A in host
    // vertex order.
    std::optional<std::string> y0;
    // Accept a witness that is not independent (Delta = 2 bases such as a
    // single edge).
    bool allow_dependent_witness = false;
};

// G_0 .. G_ell over a common base. levels[j] is G_j; every level carries the
// roles x1..xk, y0..yj, A_ell and (j >= 1) xp1..xpk plus its sub-copy index.
struct GChain {
    LabeledConfiguration base;
    int k = 0;
    std::vector<LabeledConfiguration> levels;

    int ell() const { return static_cast<int>(levels.size()) - 1; }
    const LabeledConfiguration& top() const { return levels.back(); }
    // e(G_j) / e(G) = (k^{j+1} - 1) / (k - 1); j = -1 gives 0.
    long long weight(int j) const;
};

GChain build_G_chain(const LabeledConfiguration& base, int ell, const GOptions& options = {});
LabeledConfiguration build_G(const LabeledConfiguration& base, int ell, const GOptions& options = {});

// Predicted sizes, used by the size guards.
long long predicted_G_edges(long long base_edges, int k, int ell);

std::string g_subcopy_name(int level, int i);  // "G_{level}^{i}"
std::string g_base_copy_name(int ell);         // "G^{ell}"

} // namespace bes
