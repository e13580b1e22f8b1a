#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pebbling/errors.hpp"
#include "pebbling/graph_spec.hpp"
#include "pebbling/properties.hpp"
#include "pebbling/report.hpp"
#include "pebbling/search.hpp"
#include "pebbling/solver.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pebbling;

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

enum class Format { human, json, csv };

struct GlobalArgs {
    std::string format = "human";
    int threads = 0;
    long long budget = 0;            // 0 = unlimited
    std::string search_mode = "deterministic";

    Format fmt() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::human;
    }

    SearchOptions options() const {
        SearchOptions o;
        o.threads = threads;
        o.mode = search_mode == "fast" ? SearchMode::fast : SearchMode::deterministic;
        if (budget > 0) o.node_budget = budget;
        return o;
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

RunManifest make_manifest(const GlobalArgs& g, const std::string& command_line,
                          std::vector<std::string> graphs,
                          std::optional<std::uint64_t> seed = std::nullopt) {
    RunManifest m;
    m.command_line = command_line;
    m.graphs = std::move(graphs);
    m.seed = seed;
    m.threads = resolve_threads(g.threads);
    if (g.budget > 0) m.node_budget = g.budget;
    m.search_mode = g.search_mode;
    m.started = iso8601_utc_now();
    return m;
}

void emit_json(RunManifest manifest, ordered_json body) {
    manifest.finished = iso8601_utc_now();
    ordered_json out;
    out["manifest"] = manifest_json(manifest);
    for (auto& [key, value] : body.items()) out[key] = value;
    std::cout << out.dump(2) << '\n';
}

std::pair<long long, long long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long long v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InvalidParameter("bad range '" + text + "', expected N or A..B");
    }
}

CheckKind parse_kind(const std::string& text) {
    if (text == "exhaustive") return CheckKind::exhaustive;
    if (text == "sampled") return CheckKind::sampled;
    if (text == "adversarial") return CheckKind::adversarial;
    throw InvalidParameter("bad mode '" + text + "'");
}

// ---------------- solve ----------------

struct SolveArgs {
    std::string graph, config, target;
    long long demand = 1;
    bool certificate = false;
};

int run_solve(const GlobalArgs& global, const SolveArgs& args, const std::string& cmdline) {
    RunManifest manifest = make_manifest(global, cmdline, {args.graph});
    Graph g = parse_graph_spec(args.graph);
    Configuration config = parse_config(g, args.config);
    int target = g.require_vertex(args.target);

    std::optional<long long> budget;
    if (global.budget > 0) budget = global.budget;
    SolveResult result = is_solvable(g, config, target, args.demand, args.certificate, budget);

    switch (global.fmt()) {
        case Format::json:
            emit_json(std::move(manifest),
                      solve_report_json(g, config, target, args.demand, result));
            break;
        case Format::csv:
            std::cout << "graph,config,target,demand,solvable\n"
                      << g.name() << ",\"" << format_config(g, config) << "\","
                      << g.label(target) << "," << args.demand << ","
                      << (result.solvable ? "true" : "false") << "\n";
            break;
        case Format::human:
            std::cout << (result.solvable ? "solvable" : "unsolvable") << '\n';
            if (result.certificate) {
                std::cout << "certificate:";
                for (const Move& m : *result.certificate) std::cout << ' ' << format_move(g, m);
                std::cout << '\n';
            }
            std::cout << "nodes=" << result.stats.nodes_explored
                      << " memo_hits=" << result.stats.memo_hits
                      << " pruned_potential=" << result.stats.pruned_potential
                      << " fastpath_stack=" << result.stats.fastpath_stack
                      << " fastpath_greedy=" << result.stats.fastpath_greedy << '\n';
            break;
    }
    return result.solvable ? kExitSolvable : kExitUnsolvable;
}

// ---------------- number ----------------

struct NumberArgs {
    std::string graph, target;
    long long demand = 1;
};

int run_number(const GlobalArgs& global, const NumberArgs& args, const std::string& cmdline) {
    RunManifest manifest = make_manifest(global, cmdline, {args.graph});
    Graph g = parse_graph_spec(args.graph);
    SearchOptions options = global.options();

    if (!args.target.empty()) {
        int target = g.require_vertex(args.target);
        TargetNumber tn = target_pebbling_number(g, target, args.demand, options);
        switch (global.fmt()) {
            case Format::json: {
                ordered_json body{{"graph", g.name()},
                                  {"t", args.demand},
                                  {"target", g.label(target)},
                                  {"value", tn.value},
                                  {"witness", format_config(g, tn.witness)},
                                  {"stats",
                                   ordered_json{{"configs_tested", tn.stats.configs_tested},
                                                {"solver_nodes", tn.stats.solver_nodes}}}};
                emit_json(std::move(manifest), std::move(body));
                break;
            }
            case Format::csv:
                std::cout << "target,value,witness\n"
                          << g.label(target) << "," << tn.value << ",\""
                          << format_config(g, tn.witness) << "\"\n";
                break;
            case Format::human:
                std::cout << "pi_" << args.demand << "(" << g.name() << ", "
                          << g.label(target) << ") = " << tn.value << '\n'
                          << "witness (size " << tn.value - 1
                          << ", unsolvable): " << format_config(g, tn.witness) << '\n';
                break;
        }
        return 0;
    }

    PebblingNumberReport report = pebbling_number(g, args.demand, options);
    switch (global.fmt()) {
        case Format::json:
            emit_json(std::move(manifest), number_report_json(g, report));
            break;
        case Format::csv:
            std::cout << number_report_csv(g, report);
            break;
        case Format::human:
            std::cout << "pi_" << args.demand << "(" << g.name() << ") = " << report.value
                      << '\n';
            if (report.formula)
                std::cout << "formula value " << *report.formula << " (delta "
                          << report.value - *report.formula << ")\n";
            for (const auto& entry : report.per_target)
                std::cout << "  " << g.label(entry.target) << ": " << entry.value
                          << "  witness " << format_config(g, entry.witness) << '\n';
            std::cout << "configs_tested=" << report.stats.configs_tested
                      << " solver_nodes=" << report.stats.solver_nodes << '\n';
            break;
    }
    return 0;
}

// ---------------- check ----------------

struct CheckArgs {
    std::string property;
    std::string graph, g_spec, h_spec;
    std::string n_range = "3..4", t_text = "1";
    long long s = 1;
    std::string mode = "exhaustive";
    long long samples = 5000;
    std::uint64_t seed = 0;
    unsigned long long ceiling = 0;

    long long single_t() const {
        auto [lo, hi] = parse_range(t_text);
        if (lo != hi) throw InvalidParameter("this property takes a single t, got '" + t_text + "'");
        return lo;
    }
};

int run_check(const GlobalArgs& global, const CheckArgs& args, const std::string& cmdline) {
    SearchOptions options = global.options();
    if (args.ceiling > 0) options.exhaustive_ceiling = args.ceiling;
    CheckMode mode;
    mode.kind = parse_kind(args.mode);
    mode.samples = args.samples;
    mode.seed = args.seed;
    std::optional<std::uint64_t> manifest_seed;
    if (mode.kind == CheckKind::sampled) manifest_seed = args.seed;

    PropertyReport report;
    std::vector<std::string> graphs;
    if (args.property == "formula-tpn") {
        auto [n_lo, n_hi] = parse_range(args.n_range);
        auto [t_lo, t_hi] = parse_range(args.t_text);
        graphs = {"T(P:" + std::to_string(n_lo) + ".." + std::to_string(n_hi) + ")"};
        report = check_formula_tpn(static_cast<int>(n_lo), static_cast<int>(n_hi), t_lo, t_hi,
                                   options);
    } else if (args.property == "2t") {
        if (args.graph.empty()) throw InvalidParameter("check 2t: --graph is required");
        Graph g = parse_graph_spec(args.graph);
        graphs = {args.graph};
        report = check_2t_property(g, args.single_t(), mode, options);
    } else if (args.property == "product") {
        if (args.g_spec.empty() || args.h_spec.empty())
            throw InvalidParameter("check product: --g and --h are required");
        Graph g = parse_graph_spec(args.g_spec);
        Graph h = parse_graph_spec(args.h_spec);
        graphs = {args.g_spec, args.h_spec};
        report = check_product_bound(g, h, args.s, args.single_t(), mode, options);
    } else {
        throw InvalidParameter("unknown property '" + args.property +
                               "', expected formula-tpn, 2t or product");
    }

    RunManifest manifest = make_manifest(global, cmdline, graphs, manifest_seed);
    switch (global.fmt()) {
        case Format::json:
            emit_json(std::move(manifest), property_report_json(report));
            break;
        case Format::csv:
            std::cout << property_report_csv(report);
            break;
        case Format::human:
            std::cout << report.property << ": " << report.verdict << " [" << report.coverage
                      << "]\n";
            if (report.counterexample)
                std::cout << "counterexample: " << report.counterexample->config_text
                          << " target " << report.counterexample->target_label << " demand "
                          << report.counterexample->demand << '\n';
            if (report.details.contains("results"))
                for (const auto& row : report.details["results"])
                    std::cout << "  n=" << row["n"] << " t=" << row["t"] << " formula "
                              << row["formula"] << " computed " << row["computed"] << " ("
                              << row["verdict"].get<std::string>() << ")\n";
            if (report.details.contains("budget_error"))
                std::cout << "budget: " << report.details["budget_error"].get<std::string>()
                          << '\n';
            break;
    }
    return report.exit_code();
}

// ---------------- graph ----------------

struct GraphArgs {
    std::string graph;
    std::string export_edges;
};

int run_graph(const GlobalArgs& global, const GraphArgs& args, const std::string& cmdline) {
    RunManifest manifest = make_manifest(global, cmdline, {args.graph});
    Graph g = parse_graph_spec(args.graph);
    if (!args.export_edges.empty()) {
        std::ofstream out(args.export_edges);
        if (!out) throw InvalidParameter("cannot write '" + args.export_edges + "'");
        write_edge_list(out, g);
    }
    int diameter = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        diameter = std::max(diameter, g.eccentricity(v));
    if (global.fmt() == Format::json) {
        ordered_json body{{"graph", g.name()},
                          {"vertices", g.vertex_count()},
                          {"edges", g.edge_count()},
                          {"diameter", diameter},
                          {"labels", g.labels()}};
        emit_json(std::move(manifest), std::move(body));
    } else {
        std::cout << g.name() << ": " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges, diameter " << diameter << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph-pebbling workbench"};
    app.set_help_flag("--help", "print help");   // frees -h/--h for the product factor
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GlobalArgs global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--threads", global.threads,
                   "worker threads (0 = PEBBLE_THREADS or hardware)");
    app.add_option("--budget", global.budget, "solver node budget (0 = unlimited)");
    app.add_option("--search-mode", global.search_mode, "witness selection mode")
        ->check(CLI::IsMember({"deterministic", "fast"}));

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "decide t-pebbling reachability");
    solve->add_option("--graph", solve_args.graph, "graph spec")->required();
    solve->add_option("--config", solve_args.config, "configuration, label:count pairs")
        ->required();
    solve->add_option("--target", solve_args.target, "target vertex label")->required();
    solve->add_option("-t,--t", solve_args.demand, "pebbles to deliver")->required();
    solve->add_flag("--certificate", solve_args.certificate, "emit a move certificate");

    NumberArgs number_args;
    CLI::App* number = app.add_subcommand("number", "compute the t-pebbling number");
    number->add_option("--graph", number_args.graph, "graph spec")->required();
    number->add_option("-t,--t", number_args.demand, "demand t")->required();
    number->add_option("--target", number_args.target, "restrict to one target");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "check a pebbling property");
    check->add_option("--property", check_args.property, "formula-tpn | 2t | product")
        ->required();
    check->add_option("--graph", check_args.graph, "graph spec (2t)");
    check->add_option("--g", check_args.g_spec, "first factor (product)");
    check->add_option("--h", check_args.h_spec, "second factor (product)");
    check->add_option("--n", check_args.n_range, "n range, e.g. 3..5 (formula-tpn)");
    check->add_option("-s,--s", check_args.s, "demand s (product)");
    check->add_option("-t,--t", check_args.t_text,
                      "demand t; formula-tpn accepts a range like 1..2");
    check->add_option("--mode", check_args.mode, "exhaustive | sampled | adversarial");
    check->add_option("--samples", check_args.samples, "sample count (sampled mode)");
    check->add_option("--seed", check_args.seed, "rng seed (sampled mode)");
    check->add_option("--ceiling", check_args.ceiling, "exhaustive-space ceiling override");

    GraphArgs graph_args;
    CLI::App* graph_cmd = app.add_subcommand("graph", "build and inspect a graph");
    graph_cmd->add_option("--graph", graph_args.graph, "graph spec or @edge-list-file")
        ->required();
    graph_cmd->add_option("--export-edges", graph_args.export_edges, "write an edge-list file");

    const std::string cmdline = join_args(argc, argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(global, solve_args, cmdline);
        if (number->parsed()) return run_number(global, number_args, cmdline);
        if (check->parsed()) return run_check(global, check_args, cmdline);
        if (graph_cmd->parsed()) return run_graph(global, graph_args, cmdline);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        if (e.bracket()) {
            std::cerr << "bracket: value >= " << e.bracket()->lower;
            if (e.bracket()->upper) std::cerr << ", <= " << *e.bracket()->upper;
            std::cerr << '\n';
        }
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
