#include "locert/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "locert/json_io.hpp"

namespace locert {

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

json make_manifest(const std::string& command, const std::vector<std::string>& argv,
                   std::optional<std::uint64_t> seed,
                   const std::optional<std::string>& input_bytes) {
    json manifest;
    manifest["tool"] = "locert";
    manifest["version"] = kToolVersion;
    manifest["command"] = command;
    manifest["argv"] = argv;
    manifest["seed"] = seed ? json(*seed) : json(nullptr);
    manifest["input_digest"] =
        input_bytes ? json(hex64(fnv1a(*input_bytes))) : json(nullptr);
    return manifest;
}

std::string slurp(std::istream& in, const std::string& path) {
    std::ostringstream buffer;
    if (path.empty()) {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) fail(Errc::BadFormat, "cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) fail(Errc::BadFormat, "cannot open output file: " + path);
    file << text;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::BadFormat, std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

SimScheme scheme_from_name(const std::string& name) {
    if (name == "tree") return SimScheme::Tree;
    if (name == "chordal") return SimScheme::Chordal;
    if (name == "k4fd") return SimScheme::K4FreeDismantlable;
    if (name == "st") return SimScheme::SpanningTree;
    fail(Errc::InvalidArgument, "unknown scheme: " + name);
}

RootLabeling labels_from_doc(const GraphDoc& doc) {
    if (!doc.labels)
        fail(Errc::BadFormat, "spanning-tree scheme needs a root label");
    RootLabeling labels{*doc.labels};
    labels.validate(doc.graph);
    return labels;
}

// Initial simulator states: "states" entries are null (reset), a 0/1
// string, or an integer; wrong lengths are accepted here and handled as
// corruption by the guards.
std::vector<NodeState> states_from_json(const json& j, const Graph& g) {
    const json& states = j["states"];
    if (!states.is_array() || static_cast<int>(states.size()) != g.node_count())
        fail(Errc::BadFormat, "field 'states': expected one entry per node");
    std::vector<NodeState> out;
    out.reserve(states.size());
    for (const auto& s : states) {
        if (s.is_null()) {
            out.push_back(NodeState::bot());
        } else if (s.is_string()) {
            BitString bits;
            for (char c : s.get<std::string>()) {
                if (c != '0' && c != '1')
                    fail(Errc::BadFormat, "field 'states': expected a 0/1 string");
                bits.push_back(static_cast<std::uint8_t>(c - '0'));
            }
            out.push_back(NodeState::orientation(std::move(bits)));
        } else if (s.is_number_integer()) {
            out.push_back(NodeState::ternary(s.get<int>()));
        } else {
            fail(Errc::BadFormat, "field 'states': expected null, string or int");
        }
    }
    return out;
}

std::vector<NodeState> states_from_certs(const GraphDoc& doc, SimScheme scheme) {
    std::vector<NodeState> out;
    if (scheme == SimScheme::SpanningTree) {
        for (int value : doc.ternary_certs->values)
            out.push_back(NodeState::ternary(value));
    } else {
        for (const BitString& bits : doc.orientation_certs->bits)
            out.push_back(NodeState::orientation(bits));
    }
    return out;
}

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool has_input = true) {
    if (has_input)
        cmd->add_option("--in", opts.in_path, "input file (default: stdin)");
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
    cmd->add_flag("--pretty", opts.pretty, "indent JSON output");
}

int run_generate(const std::string& klass, int n, int extra_edges,
                 std::uint64_t seed, const CommonOpts& opts, std::ostream& out,
                 const std::vector<std::string>& argv) {
    GraphDoc doc;
    if (klass == "tree")
        doc.graph = gen_tree(n, seed);
    else if (klass == "chordal")
        doc.graph = gen_chordal(n, extra_edges, seed);
    else if (klass == "dismantlable")
        doc.graph = gen_dismantlable(n, false, seed);
    else
        doc.graph = gen_dismantlable(n, true, seed);  // k4fd

    json j = graph_doc_to_json(doc);
    j["manifest"] = make_manifest("generate", argv, seed, std::nullopt);
    emit(out, opts.out_path, dump(j, opts.pretty));
    return 0;
}

int run_construct(SimScheme scheme, NodeId root, const CommonOpts& opts,
                  std::istream& in, std::ostream& out,
                  const std::vector<std::string>& argv) {
    const std::string input = slurp(in, opts.in_path);
    GraphDoc doc = graph_doc_from_json(parse_json_text(input));
    json warnings = json::array();

    switch (scheme) {
        case SimScheme::Tree:
            doc.orientation_certs = construct_tree_cert(doc.graph);
            break;
        case SimScheme::Chordal: {
            auto ordering = find_simplicial_ordering(doc.graph);
            if (!ordering)
                fail(Errc::InvalidOrdering, "graph is not chordal");
            doc.orientation_certs = construct_chordal_cert(doc.graph, *ordering);
            break;
        }
        case SimScheme::K4FreeDismantlable: {
            auto ordering = find_dismantling_ordering(doc.graph);
            if (!ordering)
                fail(Errc::InvalidOrdering, "graph is not dismantlable");
            bool k4 = false;
            doc.orientation_certs =
                construct_dismantlable_cert(doc.graph, *ordering, &k4);
            if (k4)
                warnings.push_back(
                    "graph contains a K4; the unique-sink guarantee does not apply");
            break;
        }
        case SimScheme::SpanningTree: {
            if (root < 0) {
                if (doc.labels) {
                    RootLabeling labels = labels_from_doc(doc);
                    root = labels.root();
                } else {
                    fail(Errc::InvalidArgument, "--root is required for --scheme st");
                }
            }
            doc.graph.check_node(root);
            doc.ternary_certs = construct_st_cert(doc.graph, root);
            doc.labels = RootLabeling::single_root(doc.graph.node_count(), root).labels;
            break;
        }
    }

    json j = graph_doc_to_json(doc);
    if (!warnings.empty()) j["warnings"] = warnings;
    j["manifest"] = make_manifest("construct", argv, std::nullopt, input);
    emit(out, opts.out_path, dump(j, opts.pretty));
    return 0;
}

int run_verify(SimScheme scheme, const CommonOpts& opts, std::istream& in,
               std::ostream& out, const std::vector<std::string>& argv) {
    const std::string input = slurp(in, opts.in_path);
    const GraphDoc doc = graph_doc_from_json(parse_json_text(input));

    GlobalVerdict verdict;
    json j;
    if (scheme == SimScheme::SpanningTree) {
        if (!doc.ternary_certs)
            fail(Errc::BadFormat, "expected ternary certs for --scheme st");
        const RootLabeling labels = labels_from_doc(doc);
        verdict = verify_st_global(doc.graph, *doc.ternary_certs, labels);
        j = verdict_to_json(verdict);
        if (verdict.accepted) {
            j["parents"] = parent_map_to_json(derive_tree(
                doc.graph, *doc.ternary_certs, labels, TieRule::LowestPort));
        }
    } else {
        if (!doc.orientation_certs)
            fail(Errc::BadFormat, "expected orientation certs (bitstrings)");
        verdict =
            verify_global(doc.graph, *doc.orientation_certs, orientation_scheme(scheme));
        j = verdict_to_json(verdict);
        if (verdict.accepted) {
            j["sinks"] = sinks(doc.graph, *doc.orientation_certs);
        }
    }
    j["manifest"] = make_manifest("verify", argv, std::nullopt, input);
    emit(out, opts.out_path, dump(j, opts.pretty));
    return verdict.accepted ? 0 : 1;
}

int run_simulate(SimScheme scheme, std::uint64_t seed, std::uint64_t budget,
                 int faults, const std::string& init, bool trace,
                 const CommonOpts& opts, std::istream& in, std::ostream& out,
                 const std::vector<std::string>& argv) {
    const std::string input = slurp(in, opts.in_path);
    const json input_json = parse_json_text(input);
    const GraphDoc doc = graph_doc_from_json(input_json);

    std::optional<RootLabeling> labels;
    if (scheme == SimScheme::SpanningTree) labels = labels_from_doc(doc);
    Configuration config = make_configuration(doc.graph, scheme, std::move(labels));

    const bool file_states =
        input_json.contains("states") ||
        (scheme == SimScheme::SpanningTree ? doc.ternary_certs.has_value()
                                           : doc.orientation_certs.has_value());
    std::string mode = init;
    if (mode == "auto") mode = file_states ? "file" : "bot";

    if (mode == "file") {
        if (input_json.contains("states"))
            config.states = states_from_json(input_json, config.graph);
        else if (file_states)
            config.states = states_from_certs(doc, scheme);
        else
            fail(Errc::BadFormat, "--init file needs 'states' or 'certs'");
    } else if (mode == "random") {
        Rng init_rng(seed ^ 0x5DEECE66Dull);
        std::vector<NodeId> all(config.graph.node_count());
        for (NodeId v = 0; v < config.graph.node_count(); ++v) all[v] = v;
        config = inject_faults(std::move(config), all, init_rng);
    } else if (mode != "bot") {
        fail(Errc::InvalidArgument, "--init must be bot, random, file or auto");
    }

    std::ostringstream lines;
    StepCallback on_step;
    if (trace) {
        on_step = [&lines](std::uint64_t step_index,
                           const std::vector<NodeId>& activated,
                           const Configuration& after) {
            const std::vector<Guard> guards = enabled_guards(after);
            int resets = 0;
            int violations = 0;
            for (NodeId v = 0; v < after.graph.node_count(); ++v) {
                if (after.states[v].is_bot()) ++resets;
                if (guards[v] == Guard::S1) ++violations;
            }
            json line;
            line["step"] = step_index;
            line["activated"] = activated;
            line["digest"] = hex64(config_digest(after));
            line["resets"] = resets;
            line["violations"] = violations;
            lines << line.dump() << "\n";
        };
    }

    // initial run, then one fault round per requested fault, all on one
    // shared activation budget
    std::uint64_t used = 0;
    std::uint64_t total_steps = 0;
    RunResult result = run(std::move(config), seed, budget, false, on_step);
    used += result.trace.activations;
    total_steps += result.trace.steps;
    int fault_rounds = 0;
    Rng fault_rng(seed ^ 0xFA17FA17FA17FA17ull);
    while (result.trace.outcome == Trace::Outcome::Stabilized &&
           fault_rounds < faults) {
        ++fault_rounds;
        const NodeId victim =
            static_cast<NodeId>(fault_rng.below(result.final_config.graph.node_count()));
        Configuration faulted =
            inject_faults(std::move(result.final_config), {victim}, fault_rng);
        result = run(std::move(faulted), seed + fault_rounds, budget - used, false,
                     on_step);
        used += result.trace.activations;
        total_steps += result.trace.steps;
    }

    const bool stabilized = result.trace.outcome == Trace::Outcome::Stabilized;
    json summary;
    summary["outcome"] = stabilized ? "stabilized" : "budget_exhausted";
    summary["steps"] = total_steps;
    summary["activations"] = used;
    summary["faults_injected"] = fault_rounds;
    summary["digest"] = hex64(config_digest(result.final_config));
    const bool accepted = stabilized && configuration_correct(result.final_config);
    summary["accepted"] = accepted;
    if (accepted) {
        if (scheme == SimScheme::SpanningTree) {
            TernaryCertificate certs;
            for (const NodeState& s : result.final_config.states)
                certs.values.push_back(s.value());
            const ParentMap parents =
                derive_tree(result.final_config.graph, certs,
                            *result.final_config.labels, TieRule::LowestPort);
            summary["parents"] = parent_map_to_json(parents);
        } else {
            OrientationCertificate certs;
            for (const NodeState& s : result.final_config.states)
                certs.bits.push_back(s.bits());
            summary["sinks"] = sinks(result.final_config.graph, certs);
        }
    }
    summary["manifest"] = make_manifest("simulate", argv, seed, input);

    emit(out, opts.out_path, lines.str() + dump(summary, opts.pretty));
    return stabilized ? 0 : 1;
}

int run_oracle(SimScheme scheme, NodeId root, int max_edges, int max_nodes,
               const CommonOpts& opts, std::istream& in, std::ostream& out,
               const std::vector<std::string>& argv) {
    const std::string input = slurp(in, opts.in_path);
    const GraphDoc doc = graph_doc_from_json(parse_json_text(input));

    json j;
    bool sound = true;
    if (scheme == SimScheme::SpanningTree) {
        if (root < 0) root = doc.labels ? labels_from_doc(doc).root() : 0;
        const StSoundnessReport report =
            soundness_exhaustive_st(doc.graph, root, max_nodes);
        sound = report.sound();
        j = report_to_json(report);
    } else {
        const SoundnessReport report =
            soundness_exhaustive(doc.graph, orientation_scheme(scheme), max_edges);
        sound = report.sound();
        j = report_to_json(report);
    }
    j["manifest"] = make_manifest("oracle", argv, std::nullopt, input);
    emit(out, opts.out_path, dump(j, opts.pretty));
    return sound ? 0 : 1;
}

int run_export_dot(const CommonOpts& opts, std::istream& in, std::ostream& out,
                   const std::vector<std::string>& argv) {
    const std::string input = slurp(in, opts.in_path);
    const GraphDoc doc = graph_doc_from_json(parse_json_text(input));
    const json manifest = make_manifest("export-dot", argv, std::nullopt, input);
    emit(out, opts.out_path, "// manifest: " + manifest.dump() + "\n" + to_dot(doc));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"local certification toolkit: constant-size certificates for "
                 "leader election and spanning trees, with a self-stabilization "
                 "simulator"};
    app.name("locert");
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "generate a seeded graph");
    std::string klass;
    int gen_n = 0;
    int extra_edges = -1;
    std::uint64_t gen_seed = 0;
    CommonOpts gen_opts;
    generate->add_option("--class", klass, "graph class")
        ->required()
        ->check(CLI::IsMember({"tree", "chordal", "dismantlable", "k4fd"}));
    generate->add_option("--n", gen_n, "node count")->required();
    generate->add_option("--extra-edges", extra_edges,
                         "extra edge budget for chordal (default n/2)");
    generate->add_option("--seed", gen_seed, "rng seed")->required();
    add_common(generate, gen_opts, /*has_input=*/false);

    // construct
    auto* construct = app.add_subcommand("construct", "build a certificate");
    std::string construct_scheme;
    NodeId construct_root = -1;
    CommonOpts construct_opts;
    construct->add_option("--scheme", construct_scheme, "certification scheme")
        ->required()
        ->check(CLI::IsMember({"tree", "chordal", "k4fd", "st"}));
    construct->add_option("--root", construct_root, "root node for --scheme st");
    add_common(construct, construct_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "run every local check");
    std::string verify_scheme;
    CommonOpts verify_opts;
    verify->add_option("--scheme", verify_scheme, "certification scheme")
        ->required()
        ->check(CLI::IsMember({"tree", "chordal", "k4fd", "st"}));
    add_common(verify, verify_opts);

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate", "run the certificate-to-self-stabilization transformation");
    std::string sim_scheme;
    std::uint64_t sim_seed = 0;
    std::uint64_t sim_budget = 1000000;
    int sim_faults = 0;
    std::string sim_init = "auto";
    bool sim_trace = false;
    int sim_jobs = 1;
    CommonOpts sim_opts;
    simulate->add_option("--scheme", sim_scheme, "certification scheme")
        ->required()
        ->check(CLI::IsMember({"tree", "chordal", "k4fd", "st"}));
    simulate->add_option("--seed", sim_seed, "rng seed")->required();
    simulate->add_option("--budget", sim_budget,
                         "node-activation budget (default 1e6)");
    simulate->add_option("--faults", sim_faults,
                         "single-node fault injections after stabilizing");
    simulate->add_option("--init", sim_init, "initial states: bot|random|file|auto")
        ->check(CLI::IsMember({"bot", "random", "file", "auto"}));
    simulate->add_flag("--trace", sim_trace, "emit one JSON line per step");
    simulate->add_option("--jobs", sim_jobs, "worker count (traces are identical)");
    add_common(simulate, sim_opts);

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "exhaustively check soundness on one instance");
    std::string oracle_scheme;
    NodeId oracle_root = -1;
    int max_edges = OrientationEnumerator::kDefaultEdgeBound;
    int max_nodes = StSoundnessReport::kDefaultNodeBound;
    int jobs = 1;
    CommonOpts oracle_opts;
    oracle->add_option("--scheme", oracle_scheme, "certification scheme")
        ->required()
        ->check(CLI::IsMember({"tree", "chordal", "k4fd", "st"}));
    oracle->add_option("--root", oracle_root, "root node for --scheme st");
    oracle->add_option("--max-edges", max_edges, "edge bound for enumeration");
    oracle->add_option("--max-nodes", max_nodes, "node bound for --scheme st");
    oracle->add_option("--jobs", jobs, "worker count (reports are identical)");
    add_common(oracle, oracle_opts);

    // export-dot
    auto* export_dot = app.add_subcommand("export-dot", "graph (+certs) to DOT");
    CommonOpts dot_opts;
    add_common(export_dot, dot_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            if (extra_edges < 0) extra_edges = gen_n / 2;
            return run_generate(klass, gen_n, extra_edges, gen_seed, gen_opts, out,
                                args);
        }
        if (construct->parsed())
            return run_construct(scheme_from_name(construct_scheme), construct_root,
                                 construct_opts, in, out, args);
        if (verify->parsed())
            return run_verify(scheme_from_name(verify_scheme), verify_opts, in, out,
                              args);
        if (simulate->parsed())
            return run_simulate(scheme_from_name(sim_scheme), sim_seed, sim_budget,
                                sim_faults, sim_init, sim_trace, sim_opts, in, out,
                                args);
        if (oracle->parsed())
            return run_oracle(scheme_from_name(oracle_scheme), oracle_root, max_edges,
                              max_nodes, oracle_opts, in, out, args);
        if (export_dot->parsed()) return run_export_dot(dot_opts, in, out, args);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace locert
