#include "bes/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bes {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string("field '") + key + "' has the wrong type");
    }
}

Json labels_json(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> image_labels(const Hypergraph& h, const std::vector<VertexId>& ids) {
    std::vector<std::string> out;
    for (auto v : ids) out.push_back(h.label(v));
    return out;
}

Json optional_labels(const std::optional<std::vector<std::string>>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["r"] = h.uniformity();
    j["vertices"] = labels_json(h.labels());
    j["edges"] = h.canonical_edges();
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object()) throw Error("hypergraph JSON must be an object");
    const int r = field<int>(j, "r");
    auto vertices = field<std::vector<std::string>>(j, "vertices");
    auto edges = field<std::vector<LabelEdge>>(j, "edges");
    return Hypergraph::make(r, std::move(vertices), edges);
}

std::string serialize_hypergraph(const Hypergraph& h) { return dump(hypergraph_to_json(h)); }

Hypergraph parse_hypergraph(std::string_view text) { return hypergraph_from_json(parse_json(text)); }

Json configuration_to_json(const LabeledConfiguration& c) {
    Json j = hypergraph_to_json(c.graph);
    Json roles = Json::object();
    for (const auto& [name, labels] : c.roles) roles[name] = labels;
    j["roles"] = roles;
    Json fam;
    fam["kind"] = family_name(c.family.kind);
    fam["k"] = c.family.k;
    fam["ell"] = c.family.ell;
    fam["base"] = c.family.base;
    j["family"] = fam;
    Json subs = Json::object();
    for (const auto& s : c.subcopies) {
        Json entry;
        entry["template"] = s.template_name;
        entry["image"] = image_labels(c.graph, s.image);
        subs[s.name] = entry;
    }
    j["subcopies"] = subs;
    return j;
}

LabeledConfiguration configuration_from_json(const Json& j) {
    LabeledConfiguration c;
    c.graph = hypergraph_from_json(j);
    if (j.contains("roles")) {
        const auto& roles = j.at("roles");
        if (!roles.is_object()) throw Error("'roles' must be an object");
        for (const auto& [name, labels] : roles.items()) {
            if (!labels.is_array()) throw Error("role '" + name + "' must be a list of labels");
            c.roles[name] = labels.get<std::vector<std::string>>();
        }
    }
    if (j.contains("family") && !j.at("family").is_null()) {
        const auto& f = j.at("family");
        c.family.kind = family_from_name(field<std::string>(f, "kind"));
        c.family.k = f.value("k", 0);
        c.family.ell = f.value("ell", 0);
        c.family.base = f.value("base", std::string{});
    }
    if (j.contains("subcopies")) {
        const auto& subs = j.at("subcopies");
        if (!subs.is_object()) throw Error("'subcopies' must be an object");
        for (const auto& [name, entry] : subs.items()) {
            Subcopy s;
            s.name = name;
            s.template_name = field<std::string>(entry, "template");
            for (const auto& l : field<std::vector<std::string>>(entry, "image")) {
                auto id = c.graph.find(l);
                if (!id) throw Error("sub-copy '" + name + "' references unknown vertex '" + l + "'");
                s.image.push_back(*id);
            }
            c.subcopies.push_back(std::move(s));
        }
    }
    c.validate();
    return c;
}

std::string serialize_configuration(const LabeledConfiguration& c) { return dump(configuration_to_json(c)); }

LabeledConfiguration parse_configuration(std::string_view text) { return configuration_from_json(parse_json(text)); }

Json coloring_to_json(const ColoringInstance& c) {
    Json j;
    j["n"] = c.n();
    Json colors = Json::object();
    for (std::size_t i = 0; i < c.colors().size(); ++i) {
        auto p = c.pair_at(i);
        colors[std::to_string(p[0]) + "," + std::to_string(p[1])] = c.colors()[i];
    }
    j["colors"] = colors;
    return j;
}

ColoringInstance coloring_from_json(const Json& j) {
    const int n = field<int>(j, "n");
    if (n < 1 || n > 64) throw Error("coloring needs 1 <= n <= 64");
    const auto& colors = j.contains("colors") ? j.at("colors") : throw Error("missing field 'colors'");
    if (!colors.is_object()) throw Error("'colors' must be an object keyed by \"i,j\"");
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<long> out(pairs, 0);
    std::vector<bool> seen(pairs, false);
    ColoringInstance shape(n, std::vector<long>(pairs, 0));
    for (const auto& [key, value] : colors.items()) {
        int a = 0, b = 0;
        char tail = 0;
        if (std::sscanf(key.c_str(), "%d,%d%c", &a, &b, &tail) != 2)
            throw Error("bad pair key '" + key + "' (expected \"i,j\")");
        if (!value.is_number_integer()) throw Error("color of pair '" + key + "' must be an integer");
        const auto idx = shape.pair_index(a, b);
        if (seen[idx]) throw Error("pair '" + key + "' colored twice");
        seen[idx] = true;
        out[idx] = value.get<long>();
    }
    for (std::size_t i = 0; i < pairs; ++i)
        if (!seen[i]) {
            auto p = shape.pair_at(i);
            throw Error("pair " + std::to_string(p[0]) + "," + std::to_string(p[1]) + " has no color");
        }
    return ColoringInstance(n, std::move(out));
}

Json projection_to_json(const ProjectionResult& p) {
    Json j;
    j["r"] = p.r;
    j["k"] = p.k;
    j["e"] = p.e;
    j["anchors"] = p.anchors;
    j["case"] = projection_case_name(p.case_tag);
    j["link_count"] = p.link_count;
    j["heavy_triple"] = optional_labels(p.heavy_triple);
    j["heavy_config"] = p.heavy_config ? hypergraph_to_json(*p.heavy_config) : Json(nullptr);
    j["projected"] = p.projected ? hypergraph_to_json(*p.projected) : Json(nullptr);
    Json retained = Json::array();
    for (const auto& l : p.retained) retained.push_back({{"triple", l.triple}, {"link", l.link}});
    j["retained"] = retained;
    return j;
}

ProjectionResult projection_from_json(const Json& j) {
    ProjectionResult p;
    p.r = field<int>(j, "r");
    p.k = field<int>(j, "k");
    p.e = field<int>(j, "e");
    p.anchors = field<std::vector<std::string>>(j, "anchors");
    const auto tag = field<std::string>(j, "case");
    if (tag == "HeavyTriple")
        p.case_tag = ProjectionCase::HeavyTriple;
    else if (tag == "Projected")
        p.case_tag = ProjectionCase::Projected;
    else
        throw Error("unknown projection case '" + tag + "'");
    p.link_count = j.value("link_count", std::size_t{0});
    if (j.contains("heavy_triple") && !j.at("heavy_triple").is_null())
        p.heavy_triple = j.at("heavy_triple").get<LabelEdge>();
    if (j.contains("heavy_config") && !j.at("heavy_config").is_null())
        p.heavy_config = hypergraph_from_json(j.at("heavy_config"));
    if (j.contains("projected") && !j.at("projected").is_null())
        p.projected = hypergraph_from_json(j.at("projected"));
    if (j.contains("retained"))
        for (const auto& l : j.at("retained"))
            p.retained.push_back({field<LabelEdge>(l, "triple"), field<LabelEdge>(l, "link")});
    return p;
}

Json to_json(const DifferenceReport& d) {
    return {{"subset_size", d.subset_size}, {"induced_edges", d.induced_edges}, {"delta", d.delta}};
}

Json to_json(const NicenessReport& r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["checked_subsets"] = r.checked_subsets;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"subset", c.subset},
                               {"condition", condition_name(c.condition)},
                               {"observed_delta", c.observed_delta},
                               {"required_bound", c.required_bound}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json to_json(const CycleBoundsReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["checked_subsets"] = r.checked_subsets;
    j["failing_subset"] = optional_labels(r.failing_subset);
    j["failing_part"] = r.failing_subset ? Json(r.failing_part) : Json(nullptr);
    return j;
}

Json to_json(const WitnessSearch& w) {
    return {{"witness", optional_labels(w.witness)}, {"candidates_checked", w.candidates_checked}};
}

Json to_json(const ExtractionRecord& r) {
    Json j;
    j["step"] = step_name(r.step);
    j["level"] = r.level;
    j["t"] = r.t;
    if (r.step == ExtractionStep::Split) {
        j["d"] = r.d;
        j["residual"] = r.residual;
        j["descent_level"] = r.descent_level >= 0 ? Json(r.descent_level) : Json(nullptr);
    }
    return j;
}

Json to_json(const RamseyReport& r) {
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["q_quad"] = r.q_quad_value ? Json(*r.q_quad_value) : Json(nullptr);
    j["min_colors"] = r.min_colors;
    j["valid"] = r.valid;
    j["witness_kp"] = r.witness_kp;
    return j;
}

Json to_json(const FourGraph& g) {
    Json log = Json::array();
    for (const auto& e : g.log) {
        Json entry;
        entry["color"] = e.color;
        entry["first"] = e.first;
        entry["second"] = e.second;
        entry["four_set"] = e.four_set;
        entry["duplicate_of"] = e.duplicate_of ? Json(*e.duplicate_of) : Json(nullptr);
        log.push_back(entry);
    }
    return {{"graph", hypergraph_to_json(g.graph)}, {"log", log}};
}

Json to_json(const ImplicationReport& r) {
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["e"] = r.e;
    j["configuration_found"] = r.configuration_found;
    j["configuration_vertices"] = optional_labels(r.configuration_vertices);
    j["coloring_valid"] = r.coloring_valid;
    j["holds"] = r.holds;
    return j;
}

Json to_json(const SearchResult& r) {
    Json j;
    j["found"] = r.found;
    j["witness_vertices"] = r.found ? Json(r.witness_vertices) : Json(nullptr);
    j["witness_edges"] = r.found ? Json(r.witness_edges) : Json(nullptr);
    j["nodes_explored"] = r.nodes_explored;
    return j;
}

Json to_json(const CopyCount& c) {
    return {{"embeddings", c.embeddings}, {"automorphisms", c.automorphisms}, {"copies", c.copies}};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const Json& inputs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(inputs.dump())));
    return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace bes
