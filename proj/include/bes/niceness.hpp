#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bes/configuration.hpp"
#include "bes/hypergraph.hpp"

namespace bes {

enum class Verdict { Nice, NotNice, SampledNoViolation };

// Independence/Cond1/Cond2 belong to the niceness definition; Item1..Item3
// are the conditional properties checked on G_ell.
enum class Condition { Independence, Cond1, Cond2, Item1, Item2, Item3 };

std::string verdict_name(Verdict v);
std::string condition_name(Condition c);

struct Counterexample {
    std::vector<std::string> subset;  // host vertex order
    Condition condition = Condition::Cond1;
    long observed_delta = 0;
    long required_bound = 0;
};

struct NicenessReport {
    Verdict verdict = Verdict::Nice;
    std::uint64_t checked_subsets = 0;
    std::optional<Counterexample> counterexample;
    std::optional<std::uint64_t> seed;
};

constexpr std::size_t kMaxExhaustiveVertices = 30;
constexpr std::size_t kMaxWitnessSearchVertices = 20;

struct ExhaustiveOptions {
    unsigned workers = 1;
};

// Which rule of the niceness definition (if any) the subset `u` breaks.
struct SubsetVerdict {
    std::optional<Condition> violated;
    long delta = 0;
    long bound = 0;
};
SubsetVerdict check_nice_conditions(const Hypergraph& f, const VertexSubset& a, const VertexSubset& u);

// Exhaustive check over all 2^v subsets in increasing bitmask order. Reports
// the first counterexample in that order.
NicenessReport verify_nice(const Hypergraph& f, const VertexSubset& a, const ExhaustiveOptions& opt = {});
NicenessReport verify_nice(const LabeledConfiguration& f, const std::vector<std::string>& a,
                           const ExhaustiveOptions& opt = {});

struct SamplingOptions {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    // Extra pass over small subsets: each size 1..max_stratum_size gets this
    // many draws (or full enumeration when that is cheaper).
    std::size_t max_stratum_size = 8;
    std::uint64_t per_stratum = 20000;
};

NicenessReport sample_nice(const Hypergraph& f, const VertexSubset& a, const SamplingOptions& opt);

struct WitnessSearch {
    std::optional<std::vector<std::string>> witness;
    std::uint64_t candidates_checked = 0;
};

// First witness set in lexicographic order of host indices, or none.
WitnessSearch find_witness(const Hypergraph& f);

struct CycleBoundsReport {
    bool holds = false;
    std::uint64_t checked_subsets = 0;
    std::optional<std::vector<std::string>> failing_subset;
    std::string failing_part;  // "main" or "moreover"
};

// Exhaustive check of the two difference bounds the linear 3-cycle satisfies
// relative to {v1..v4}.
CycleBoundsReport verify_cycle_bounds(const LabeledConfiguration& cycle);

struct GlMode {
    bool exhaustive = true;
    SamplingOptions sampling;
};

// Checks the three conditional bounds on subsets U of G_ell containing
// y_0..y_{ell-1}.
NicenessReport verify_gl_niceness_properties(const LabeledConfiguration& gl, const GlMode& mode);

} // namespace bes
