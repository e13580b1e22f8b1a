#include "pebbling/report.hpp"

#include <chrono>
#include <ctime>

namespace pebbling {

using nlohmann::ordered_json;

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json manifest_json(const RunManifest& m) {
    ordered_json j{{"tool", m.tool},
                   {"version", m.version},
                   {"command", m.command_line},
                   {"graphs", m.graphs},
                   {"threads", m.threads},
                   {"search_mode", m.search_mode},
                   {"rng", m.rng}};
    if (m.seed) j["seed"] = *m.seed;
    if (m.node_budget) j["node_budget"] = *m.node_budget;
    j["started"] = m.started;
    j["finished"] = m.finished;
    return j;
}

std::string format_move(const Graph& g, const Move& move) {
    return g.label(move.from) + "->" + g.label(move.to);
}

namespace {

ordered_json stats_json(const SolveStats& s) {
    return ordered_json{{"nodes_explored", s.nodes_explored},
                        {"memo_hits", s.memo_hits},
                        {"pruned_potential", s.pruned_potential},
                        {"fastpath_stack", s.fastpath_stack},
                        {"fastpath_greedy", s.fastpath_greedy}};
}

ordered_json scan_stats_json(const ScanStats& s, double wall_ms) {
    return ordered_json{{"configs_tested", s.configs_tested},
                        {"solver_nodes", s.solver_nodes},
                        {"wall_ms", wall_ms}};
}

} // namespace

ordered_json solve_report_json(const Graph& g, const Configuration& config, int target,
                               long long demand, const SolveResult& result) {
    ordered_json j{{"graph", g.name()},
                   {"config", format_config(g, config)},
                   {"target", g.label(target)},
                   {"demand", demand},
                   {"solvable", result.solvable}};
    if (result.certificate) {
        ordered_json moves = ordered_json::array();
        for (const Move& m : *result.certificate) moves.push_back(format_move(g, m));
        j["certificate"] = std::move(moves);
    }
    j["stats"] = stats_json(result.stats);
    return j;
}

ordered_json number_report_json(const Graph& g, const PebblingNumberReport& report) {
    ordered_json per_target = ordered_json::array();
    for (const auto& entry : report.per_target)
        per_target.push_back(ordered_json{{"target", g.label(entry.target)},
                                          {"value", entry.value},
                                          {"witness", format_config(g, entry.witness)}});
    ordered_json j{{"graph", report.graph_name},
                   {"t", report.demand},
                   {"per_target", std::move(per_target)},
                   {"value", report.value},
                   {"witness", ordered_json{{"target", g.label(report.witness_target)},
                                            {"config", format_config(g, report.witness)}}}};
    if (report.formula) {
        j["formula"] = *report.formula;
        j["formula_delta"] = report.value - *report.formula;
    }
    j["stats"] = scan_stats_json(report.stats, report.wall_ms);
    return j;
}

std::string number_report_csv(const Graph& g, const PebblingNumberReport& report) {
    std::string out = "target,value,witness\n";
    for (const auto& entry : report.per_target)
        out += g.label(entry.target) + "," + std::to_string(entry.value) + ",\"" +
               format_config(g, entry.witness) + "\"\n";
    return out;
}

ordered_json property_report_json(const PropertyReport& report) {
    ordered_json j{{"property", report.property},
                   {"params", report.params},
                   {"verdict", report.verdict},
                   {"coverage", report.coverage}};
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        j["counterexample"] = ordered_json{{"graph", ce.graph_name},
                                           {"config", ce.config_text},
                                           {"target", ce.target_label},
                                           {"demand", ce.demand}};
    }
    if (!report.details.empty()) j["details"] = report.details;
    j["stats"] = scan_stats_json(report.stats, report.wall_ms);
    return j;
}

std::string property_report_csv(const PropertyReport& report) {
    if (report.property == "formula-tpn" && report.details.contains("results")) {
        std::string out = "n,t,formula,computed,delta,verdict\n";
        for (const auto& row : report.details["results"]) {
            out += std::to_string(row["n"].get<int>()) + "," +
                   std::to_string(row["t"].get<long long>()) + "," +
                   std::to_string(row["formula"].get<long long>()) + "," +
                   std::to_string(row["computed"].get<long long>()) + "," +
                   std::to_string(row["delta"].get<long long>()) + "," +
                   row["verdict"].get<std::string>() + "\n";
        }
        return out;
    }
    std::string out = "property,verdict,coverage\n";
    out += report.property + "," + report.verdict + "," + report.coverage + "\n";
    return out;
}

} // namespace pebbling
