#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// Deterministic mode scans every shard and reports the lexicographically
/// smallest counterexample; verdicts, values and witnesses are independent of
/// the worker count. Fast mode stops at the first counterexample found
/// anywhere (same verdict, arbitrary witness).
enum class SearchMode { deterministic, fast };

struct SearchOptions {
    int threads = 0;                                   // 0 = PEBBLE_THREADS or hardware
    SearchMode mode = SearchMode::deterministic;
    std::optional<long long> node_budget;              // total solver nodes for the operation
    unsigned long long exhaustive_ceiling = 10'000'000ULL;
    bool formula_seed = true;                          // seed searches on recognized T(P_n)
};

int resolve_threads(int requested);
const char* search_mode_name(SearchMode mode);

/// Brute-force oracle: breadth-first exploration of every configuration
/// reachable by any legal move sequence, no pruning beyond a visited set.
/// Hard guard: at most 8 vertices and 12 pebbles (OversizeError beyond).
bool naive_is_solvable(const Graph& g, const Configuration& config, int target,
                       long long demand);

struct ScanStats {
    unsigned long long configs_tested = 0;
    long long solver_nodes = 0;

    void add(const ScanStats& o) {
        configs_tested += o.configs_tested;
        solver_nodes += o.solver_nodes;
    }
};

struct ScanResult {
    std::optional<Configuration> witness;   // lex-first unsolvable (deterministic mode)
    ScanStats stats;
};

/// Scans all size-k configurations (optionally restricted to a support size
/// or a rank window) for one that cannot deliver `demand` to `target`.
ScanResult find_unsolvable(const Graph& g, long long k, int target, long long demand,
                           const SearchOptions& options = {},
                           std::optional<int> support = std::nullopt,
                           std::optional<std::pair<unsigned long long, unsigned long long>>
                               rank_window = std::nullopt);

struct TargetNumber {
    long long value = 0;
    Configuration witness;        // unsolvable configuration of size value-1
    ScanStats stats;
};

/// Least k such that every k-pebble configuration can deliver `demand` to
/// `target`. Exponential search from the single-stack lower bound
/// demand * 2^ecc(target), then binary search; monotone because adding a
/// pebble never hurts.
TargetNumber target_pebbling_number(const Graph& g, int target, long long demand,
                                    const SearchOptions& options = {});

struct PerTargetNumber {
    int target = 0;
    long long value = 0;
    Configuration witness;
};

struct PebblingNumberReport {
    std::string graph_name;
    long long demand = 1;
    std::vector<PerTargetNumber> per_target;
    long long value = 0;
    int witness_target = 0;
    Configuration witness;                  // size value-1, unsolvable for witness_target
    std::optional<long long> formula;       // closed form when the graph is a known T(P_n)
    ScanStats stats;
    double wall_ms = 0;
};

/// pi_t(G): maximum of target_pebbling_number over all targets.
PebblingNumberReport pebbling_number(const Graph& g, long long demand,
                                     const SearchOptions& options = {});

// t*2^(n-1) + (n-2); meaningful for n >= 3.
long long tpath_formula(int n, long long t);

namespace detail {

// Variants that draw from a caller-owned budget so one operation can span
// several scans; used by the property checks.
ScanResult scan_counterexamples(const Graph& g, long long k, std::optional<int> support,
                                int target, long long demand, const SearchOptions& options,
                                NodeBudget* budget,
                                std::optional<std::pair<unsigned long long, unsigned long long>>
                                    window = std::nullopt);

PebblingNumberReport pebbling_number(const Graph& g, long long demand,
                                     const SearchOptions& options, NodeBudget* budget);

} // namespace detail

} // namespace pebbling
