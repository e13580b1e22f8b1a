#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pebbling/graph.hpp"
#include "pebbling/properties.hpp"
#include "pebbling/search.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

inline constexpr const char* kToolName = "pebble";
inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility header embedded verbatim in every JSON report.
struct RunManifest {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string command_line;
    std::vector<std::string> graphs;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::optional<long long> node_budget;
    std::string search_mode = "deterministic";
    std::string rng = "splitmix64";
    std::string started;    // ISO-8601 UTC
    std::string finished;
};

std::string iso8601_utc_now();

nlohmann::ordered_json manifest_json(const RunManifest& manifest);

std::string format_move(const Graph& g, const Move& move);

nlohmann::ordered_json solve_report_json(const Graph& g, const Configuration& config,
                                         int target, long long demand,
                                         const SolveResult& result);

nlohmann::ordered_json number_report_json(const Graph& g, const PebblingNumberReport& report);
std::string number_report_csv(const Graph& g, const PebblingNumberReport& report);

nlohmann::ordered_json property_report_json(const PropertyReport& report);
std::string property_report_csv(const PropertyReport& report);

} // namespace pebbling
