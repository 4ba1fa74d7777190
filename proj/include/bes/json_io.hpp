#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bes/configuration.hpp"
#include "bes/extraction.hpp"
#include "bes/hypergraph.hpp"
#include "bes/niceness.hpp"
#include "bes/projection.hpp"
#include "bes/ramsey.hpp"
#include "bes/search.hpp"

namespace bes {

// Insertion-ordered so reports keep a stable, readable key order.
using Json = nlohmann::ordered_json;

// Interchange format: {"r", "vertices", "edges", "roles"?, "family"?,
// "subcopies"?}. Edges are written canonically sorted.
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
std::string serialize_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

Json configuration_to_json(const LabeledConfiguration& c);
LabeledConfiguration configuration_from_json(const Json& j);
std::string serialize_configuration(const LabeledConfiguration& c);
LabeledConfiguration parse_configuration(std::string_view text);

// {"n": int, "colors": {"i,j": id}} with 1 <= i < j <= n.
Json coloring_to_json(const ColoringInstance& c);
ColoringInstance coloring_from_json(const Json& j);

Json projection_to_json(const ProjectionResult& p);
ProjectionResult projection_from_json(const Json& j);

Json to_json(const DifferenceReport& d);
Json to_json(const NicenessReport& r);
Json to_json(const CycleBoundsReport& r);
Json to_json(const WitnessSearch& w);
Json to_json(const ExtractionRecord& r);
Json to_json(const RamseyReport& r);
Json to_json(const FourGraph& g);
Json to_json(const ImplicationReport& r);
Json to_json(const SearchResult& r);
Json to_json(const CopyCount& c);

Json parse_json(std::string_view text);  // bes::Error on malformed input
std::string dump(const Json& j);         // two-space indent, trailing newline

// "fnv1a64:<16 hex digits>" over the canonical dump of `inputs`.
std::string digest(const Json& inputs);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace bes
