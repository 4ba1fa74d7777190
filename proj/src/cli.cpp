#include "bes/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bes/configuration.hpp"
#include "bes/extraction.hpp"
#include "bes/json_io.hpp"
#include "bes/niceness.hpp"
#include "bes/projection.hpp"
#include "bes/ramsey.hpp"
#include "bes/search.hpp"

namespace bes::cli {

namespace {

struct Outcome {
    Json inputs = Json::object();  // everything the result depends on
    std::optional<std::uint64_t> seed;
    Json result;
    int code = kExitOk;
};

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

LabeledConfiguration load_configuration(const std::string& path) {
    return parse_configuration(read_text_file(path));
}

LabeledConfiguration named_base(const std::string& name) {
    if (name == "f14") return f14();
    if (name == "edge") return single_edge();
    throw Error("unknown base '" + name + "' (expected f14 or edge)");
}

Json config_summary(const LabeledConfiguration& c) {
    Json j;
    j["family"] = family_name(c.family.kind);
    j["vertices"] = c.graph.vertex_count();
    j["edges"] = c.graph.edge_count();
    j["delta"] = c.graph.delta();
    return j;
}

// Writes the configuration to `path`, or embeds it in the result.
void emit_configuration(Json& result, const LabeledConfiguration& c, const std::string& path) {
    if (path.empty()) {
        result["configuration"] = configuration_to_json(c);
    } else {
        write_text_file(path, serialize_configuration(c));
        result["output"] = path;
    }
}

// Options shared by the sampled commands.
struct SampleFlags {
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd) {
        auto* ex = cmd->add_flag("--exhaustive", exhaustive, "Check every subset");
        samples_opt = cmd->add_option("--samples", samples, "Number of random subsets");
        seed_opt = cmd->add_option("--seed", seed, "Seed for the sampler");
        samples_opt->needs(seed_opt)->excludes(ex);
        seed_opt->needs(samples_opt);
    }
    bool sampled() const { return samples_opt->count() > 0; }
};

GOptions g_options(const std::string& base, const std::string& y0) {
    GOptions o;
    if (!y0.empty()) o.y0 = y0;
    o.allow_dependent_witness = base == "edge";
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Difference and niceness toolkit for 3-graph configurations", "bes"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Construct a configuration");
    build->require_subcommand(1);
    std::string out_path;
    int k = 0;
    int ell = 0;
    std::string base = "f14";
    std::string y0;
    auto* b_cycle = build->add_subcommand("cycle", "The linear 3-cycle");
    b_cycle->add_option("-o", out_path, "Output file");
    auto* b_f14 = build->add_subcommand("f14", "The (14,10)-configuration");
    b_f14->add_option("-o", out_path, "Output file");
    auto* b_fk = build->add_subcommand("f-k", "F_k for 4 <= k <= 8");
    b_fk->add_option("--k", k, "Difference of the member")->required();
    b_fk->add_option("-o", out_path, "Output file");
    auto* b_g = build->add_subcommand("g-ell", "G_ell over a base");
    b_g->add_option("--base", base, "Base configuration: f14 or edge");
    b_g->add_option("--ell", ell, "Depth")->required();
    b_g->add_option("--y0", y0, "Witness member playing y_0");
    b_g->add_option("-o", out_path, "Output file");

    // verify
    auto* verify = app.add_subcommand("verify", "Check niceness properties");
    verify->require_subcommand(1);
    std::string input;
    std::string witness;
    unsigned workers = 1;
    SampleFlags nice_flags, gl_flags;
    auto* v_nice = verify->add_subcommand("nice", "Check a witness set");
    v_nice->add_option("--input", input, "Configuration JSON")->required();
    v_nice->add_option("--witness", witness, "Comma-separated witness labels (default: role A)");
    v_nice->add_option("--workers", workers, "Worker threads for the exhaustive scan");
    nice_flags.attach(v_nice);
    auto* v_bounds = verify->add_subcommand("claim63", "Difference bounds of the linear 3-cycle");
    v_bounds->add_option("--input", input, "Cycle JSON (default: built-in)");
    auto* v_gl = verify->add_subcommand("gl-props", "Conditional bounds on G_ell");
    v_gl->add_option("--input", input, "G_ell JSON")->required();
    gl_flags.attach(v_gl);
    auto* v_find = verify->add_subcommand("find-witness", "Search every candidate witness set");
    v_find->add_option("--input", input, "Configuration JSON")->required();

    // extract
    long long t = 0;
    std::string trace_path;
    auto* extract_cmd = app.add_subcommand("extract", "Sub-configuration of G_ell with t base copies");
    extract_cmd->add_option("--base", base, "Base configuration: f14 or edge");
    extract_cmd->add_option("--ell", ell, "Depth")->required();
    extract_cmd->add_option("--t", t, "Number of base copies")->required();
    extract_cmd->add_option("--y0", y0, "Witness member playing y_0");
    extract_cmd->add_option("-o", out_path, "Output file");
    extract_cmd->add_option("--trace", trace_path, "Trace output file");

    // project / lift
    int e = 0;
    auto* project_cmd = app.add_subcommand("project", "Project an r-graph to a 3-graph");
    project_cmd->add_option("--input", input, "r-graph JSON")->required();
    project_cmd->add_option("--k", k, "Difference parameter")->required();
    project_cmd->add_option("--e", e, "Edge count of the sought configuration")->required();
    project_cmd->add_option("-o", out_path, "Projection output file");
    std::string proj_path, config_path;
    auto* lift_cmd = app.add_subcommand("lift", "Lift a projected configuration");
    lift_cmd->add_option("--proj", proj_path, "Projection JSON")->required();
    lift_cmd->add_option("--config", config_path, "3-graph configuration JSON")->required();
    lift_cmd->add_option("-o", out_path, "Output file");

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "Edge colorings of complete graphs");
    ramsey->require_subcommand(1);
    int p = 0, q = 0;
    std::string coloring_path;
    auto* r_qquad = ramsey->add_subcommand("qquad", "Quadratic threshold");
    r_qquad->add_option("--p", p, "Clique size")->required();
    auto* r_check = ramsey->add_subcommand("check", "Minimum colors over K_p");
    r_check->add_option("--coloring", coloring_path, "Coloring JSON")->required();
    r_check->add_option("--p", p, "Clique size")->required();
    r_check->add_option("--q", q, "Required colors")->required();
    auto* r_to4 = ramsey->add_subcommand("to4", "Coloring to 4-graph");
    r_to4->add_option("--coloring", coloring_path, "Coloring JSON")->required();
    r_to4->add_option("-o", out_path, "Output file");
    auto* r_impl = ramsey->add_subcommand("implication", "Configuration versus coloring validity");
    r_impl->add_option("--coloring", coloring_path, "Coloring JSON")->required();
    r_impl->add_option("--p", p, "Clique size")->required();
    r_impl->add_option("--q", q, "Required colors")->required();

    // search
    auto* search = app.add_subcommand("search", "Exact configuration search");
    search->require_subcommand(1);
    long sv = 0, se = 0;
    std::string pattern_path;
    bool induced = false;
    auto* s_config = search->add_subcommand("config", "Find e edges on at most v vertices");
    s_config->add_option("--input", input, "Host JSON")->required();
    s_config->add_option("--v", sv, "Vertex budget")->required();
    s_config->add_option("--e", se, "Edge count")->required();
    s_config->add_option("--workers", workers, "Worker threads");
    auto* s_copies = search->add_subcommand("copies", "Count copies of a pattern");
    s_copies->add_option("--input", input, "Host JSON")->required();
    s_copies->add_option("--pattern", pattern_path, "Pattern JSON")->required();
    s_copies->add_flag("--induced", induced, "Count induced copies only");

    std::vector<std::string> storage{"bes"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    std::string command;
    Outcome o;
    try {
        if (build->parsed()) {
            LabeledConfiguration c;
            if (b_cycle->parsed()) {
                command = "build cycle";
                c = linear_three_cycle();
            } else if (b_f14->parsed()) {
                command = "build f14";
                c = f14();
            } else if (b_fk->parsed()) {
                command = "build f-k";
                o.inputs["k"] = k;
                c = build_F(k);
            } else {
                command = "build g-ell";
                o.inputs["base"] = base;
                o.inputs["ell"] = ell;
                o.inputs["y0"] = y0;
                c = build_G(named_base(base), ell, g_options(base, y0));
            }
            o.result = config_summary(c);
            emit_configuration(o.result, c, out_path);
        } else if (verify->parsed()) {
            if (v_nice->parsed()) {
                command = "verify nice";
                auto c = load_configuration(input);
                std::vector<std::string> a;
                if (!witness.empty())
                    a = split_labels(witness);
                else if (c.has_role("A"))
                    a = c.role("A");
                else
                    throw Error("no --witness given and the input has no role A");
                o.inputs["configuration"] = configuration_to_json(c);
                o.inputs["witness"] = a;
                NicenessReport rep;
                if (nice_flags.sampled()) {
                    o.seed = nice_flags.seed;
                    o.inputs["samples"] = nice_flags.samples;
                    SamplingOptions so;
                    so.samples = nice_flags.samples;
                    so.seed = nice_flags.seed;
                    rep = sample_nice(c.graph, c.graph.subset(a), so);
                } else {
                    rep = verify_nice(c, a, {workers});
                }
                o.result = to_json(rep);
                o.code = rep.verdict == Verdict::NotNice ? kExitNegative : kExitOk;
            } else if (v_bounds->parsed()) {
                command = "verify claim63";
                auto c = input.empty() ? linear_three_cycle() : load_configuration(input);
                o.inputs["configuration"] = configuration_to_json(c);
                auto rep = verify_cycle_bounds(c);
                o.result = to_json(rep);
                o.code = rep.holds ? kExitOk : kExitNegative;
            } else if (v_gl->parsed()) {
                command = "verify gl-props";
                auto c = load_configuration(input);
                o.inputs["configuration"] = configuration_to_json(c);
                GlMode mode;
                if (gl_flags.sampled()) {
                    mode.exhaustive = false;
                    mode.sampling.samples = gl_flags.samples;
                    mode.sampling.seed = gl_flags.seed;
                    o.seed = gl_flags.seed;
                    o.inputs["samples"] = gl_flags.samples;
                }
                auto rep = verify_gl_niceness_properties(c, mode);
                o.result = to_json(rep);
                o.code = rep.verdict == Verdict::NotNice ? kExitNegative : kExitOk;
            } else {
                command = "verify find-witness";
                auto c = load_configuration(input);
                o.inputs["configuration"] = hypergraph_to_json(c.graph);
                auto rep = find_witness(c.graph);
                o.result = to_json(rep);
                o.code = rep.witness ? kExitOk : kExitNegative;
            }
        } else if (extract_cmd->parsed()) {
            command = "extract";
            o.inputs["base"] = base;
            o.inputs["ell"] = ell;
            o.inputs["t"] = t;
            o.inputs["y0"] = y0;
            auto chain = build_G_chain(named_base(base), ell, g_options(base, y0));
            auto res = extract(chain, t);
            Json trace = Json::array();
            for (const auto& rec : res.trace) trace.push_back(to_json(rec));
            bool has_a = true;
            for (const auto& l : chain.top().role("A_ell")) has_a = has_a && res.subgraph.find(l).has_value();
            o.result["edges"] = res.subgraph.edge_count();
            o.result["vertices"] = res.subgraph.vertex_count();
            o.result["delta"] = res.verified.delta;
            o.result["delta_bound"] = chain.k + ell;
            o.result["contains_A_ell"] = has_a;
            o.result["trace"] = trace;
            if (!trace_path.empty()) write_text_file(trace_path, dump(trace));
            if (out_path.empty()) {
                o.result["subgraph"] = hypergraph_to_json(res.subgraph);
            } else {
                write_text_file(out_path, serialize_hypergraph(res.subgraph));
                o.result["output"] = out_path;
            }
        } else if (project_cmd->parsed()) {
            command = "project";
            auto h = hypergraph_from_json(parse_json(read_text_file(input)));
            o.inputs["graph"] = hypergraph_to_json(h);
            o.inputs["k"] = k;
            o.inputs["e"] = e;
            auto res = project(h, k, e);
            Json full = projection_to_json(res);
            if (out_path.empty()) {
                o.result = full;
            } else {
                write_text_file(out_path, dump(full));
                o.result["case"] = full["case"];
                o.result["anchors"] = full["anchors"];
                o.result["link_count"] = full["link_count"];
                o.result["retained"] = res.retained.size();
                o.result["output"] = out_path;
            }
        } else if (lift_cmd->parsed()) {
            command = "lift";
            auto proj = projection_from_json(parse_json(read_text_file(proj_path)));
            auto cfg = hypergraph_from_json(parse_json(read_text_file(config_path)));
            o.inputs["projection"] = projection_to_json(proj);
            o.inputs["configuration"] = hypergraph_to_json(cfg);
            auto lifted = lift(proj, cfg);
            o.result["vertices"] = lifted.vertex_count();
            o.result["edges"] = lifted.edge_count();
            o.result["vertex_bound"] = lift_vertex_bound(proj, cfg);
            if (out_path.empty()) {
                o.result["lifted"] = hypergraph_to_json(lifted);
            } else {
                write_text_file(out_path, serialize_hypergraph(lifted));
                o.result["output"] = out_path;
            }
        } else if (ramsey->parsed()) {
            if (r_qquad->parsed()) {
                command = "ramsey qquad";
                o.inputs["p"] = p;
                o.result["p"] = p;
                o.result["q_quad"] = q_quad(p);
            } else {
                auto c = coloring_from_json(parse_json(read_text_file(coloring_path)));
                o.inputs["coloring"] = coloring_to_json(c);
                if (r_check->parsed()) {
                    command = "ramsey check";
                    o.inputs["p"] = p;
                    o.inputs["q"] = q;
                    auto rep = check_coloring(c, p, q);
                    o.result = to_json(rep);
                    o.code = rep.valid ? kExitOk : kExitNegative;
                } else if (r_to4->parsed()) {
                    command = "ramsey to4";
                    auto g = coloring_to_4graph(c);
                    o.result = to_json(g);
                    if (!out_path.empty()) {
                        write_text_file(out_path, serialize_hypergraph(g.graph));
                        o.result["output"] = out_path;
                    }
                } else {
                    command = "ramsey implication";
                    o.inputs["p"] = p;
                    o.inputs["q"] = q;
                    auto rep = verify_implication(c, p, q);
                    o.result = to_json(rep);
                    o.code = rep.holds ? kExitOk : kExitNegative;
                }
            }
        } else {
            auto h = hypergraph_from_json(parse_json(read_text_file(input)));
            o.inputs["graph"] = hypergraph_to_json(h);
            if (s_config->parsed()) {
                command = "search config";
                o.inputs["v"] = sv;
                o.inputs["e"] = se;
                auto rep = find_configuration(h, sv, se, {workers});
                o.result = to_json(rep);
                o.code = rep.found ? kExitOk : kExitNegative;
            } else {
                command = "search copies";
                auto pat = hypergraph_from_json(parse_json(read_text_file(pattern_path)));
                o.inputs["pattern"] = hypergraph_to_json(pat);
                o.inputs["induced"] = induced;
                o.result = to_json(count_copies(h, pat, induced));
            }
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    Json report;
    report["command"] = command;
    Json keyed = {{"command", command}, {"inputs", o.inputs}};
    report["input_digest"] = digest(keyed);
    report["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
    report["result"] = o.result;
    report["timing_ms"] = static_cast<long long>(elapsed.count());
    out << dump(report);
    return o.code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace bes::cli
