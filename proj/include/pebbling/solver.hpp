#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Exact weight of a configuration against a target: numerator / 2^scale_log2
/// with numerator = sum over v of counts[v] * 2^(Dmax - d(v,target)) and
/// Dmax the eccentricity of the target. Never increases under a move; a
/// value below the demand proves unsolvability.
struct PotentialValue {
    unsigned long long numerator = 0;
    int scale_log2 = 0;
};

PotentialValue potential(const Graph& g, const Configuration& config, int target);
bool potential_at_least(const PotentialValue& p, long long demand);

struct SolveStats {
    long long nodes_explored = 0;
    long long memo_hits = 0;
    long long pruned_potential = 0;
    long long fastpath_stack = 0;
    long long fastpath_greedy = 0;

    void add(const SolveStats& o) {
        nodes_explored += o.nodes_explored;
        memo_hits += o.memo_hits;
        pruned_potential += o.pruned_potential;
        fastpath_stack += o.fastpath_stack;
        fastpath_greedy += o.fastpath_greedy;
    }
};

struct SolveResult {
    bool solvable = false;
    std::optional<std::vector<Move>> certificate;
    SolveStats stats;
};

/// Shared node allowance for one operation; solvers draw from it in batches
/// and throw BudgetExceeded when it runs dry.
class NodeBudget {
public:
    explicit NodeBudget(long long nodes) : remaining_(nodes) {}
    long long take_batch(long long want);   // returns granted amount, 0 = dry
    long long remaining() const { return remaining_.load(); }

private:
    std::atomic<long long> remaining_;
};

/// Exact depth-first decision procedure for "can this configuration put
/// `demand` pebbles on `target`". One instance is bound to a fixed
/// (graph, target, demand); the memo of failed configurations persists
/// across solve() calls, which is sound because failure facts do not depend
/// on the start configuration. Not thread-safe; use one per worker.
class Solver {
public:
    Solver(const Graph& g, int target, long long demand,
           bool want_certificate = false, NodeBudget* budget = nullptr);

    SolveResult solve(const Configuration& config);

    void clear_memo();
    std::size_t memo_size() const;

private:
    bool dfs();
    bool greedy_reaches();
    bool single_stack_covers(long long need);
    void emit_stack_certificate(int v, long long need);
    bool potential_below_demand() const;
    void memo_insert();
    bool memo_contains();
    void tick_budget();

    const Graph& graph_;
    int target_;
    long long demand_;
    bool want_certificate_;
    NodeBudget* budget_;
    long long local_quota_ = 0;

    int n_;
    int dmax_ = 0;                 // eccentricity of target
    std::vector<int> dist_;        // distance to target
    std::vector<int> next_hop_;    // lex-lowest neighbor one step closer

    std::vector<int> counts_;      // working state, mutated in place
    std::vector<int> scratch_;     // greedy buffer
    std::vector<Move> trail_;      // certificate under construction
    std::vector<Move> greedy_moves_;

    struct Key128Hash {
        std::size_t operator()(unsigned __int128 k) const {
            std::uint64_t lo = static_cast<std::uint64_t>(k);
            std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
            std::uint64_t z = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            return static_cast<std::size_t>(z ^ (z >> 31));
        }
    };
    bool packed_keys_;
    std::unordered_set<unsigned __int128, Key128Hash> memo_packed_;
    std::unordered_set<std::string> memo_bytes_;

    SolveStats stats_;
};

/// One-shot wrapper: exact verdict, optional move certificate, search stats.
/// demand = 0 is trivially solvable. Throws BudgetExceeded when node_budget
/// runs out (never returns a guessed verdict).
SolveResult is_solvable(const Graph& g, const Configuration& config, int target,
                        long long demand, bool want_certificate = false,
                        std::optional<long long> node_budget = std::nullopt);

/// Replays a certificate; true iff every move is legal in sequence and the
/// final configuration has at least `demand` pebbles on the target. A failing
/// step index is reported through `diagnostic` when provided.
bool verify_certificate(const Graph& g, const Configuration& config,
                        const std::vector<Move>& certificate, int target,
                        long long demand, std::string* diagnostic = nullptr);

} // namespace pebbling
