#include "pebbling/search.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <thread>
#include <unordered_set>

#include "pebbling/compositions.hpp"
#include "pebbling/errors.hpp"
#include "parallel_scan.hpp"

namespace pebbling {

namespace {

constexpr unsigned long long kShardSize = 4096;
constexpr std::size_t kMemoClearThreshold = std::size_t(1) << 22;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PEBBLE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

const char* search_mode_name(SearchMode mode) {
    return mode == SearchMode::deterministic ? "deterministic" : "fast";
}

long long tpath_formula(int n, long long t) {
    if (n < 1 || n > 62) throw InvalidParameter("tpath_formula: n out of range");
    return t * (1LL << (n - 1)) + (n - 2);
}

bool naive_is_solvable(const Graph& g, const Configuration& config, int target,
                       long long demand) {
    validate_config(g, config);
    const int nv = g.vertex_count();
    if (target < 0 || target >= nv) throw InvalidParameter("naive oracle: target out of range");
    if (demand <= 0) return true;
    if (nv > 8)
        throw OversizeError("naive oracle: refusing graph with more than 8 vertices");
    if (config.total() > 12)
        throw OversizeError("naive oracle: refusing configuration with more than 12 pebbles");

    if (config.counts[target] >= demand) return true;

    auto pack = [nv](const std::vector<int>& c) {
        unsigned long long key = 0;
        for (int i = 0; i < nv; ++i) key = (key << 8) | static_cast<unsigned>(c[i]);
        return key;
    };

    std::unordered_set<unsigned long long> visited;
    std::deque<std::vector<int>> queue;
    visited.insert(pack(config.counts));
    queue.push_back(config.counts);
    while (!queue.empty()) {
        std::vector<int> c = std::move(queue.front());
        queue.pop_front();
        for (int from = 0; from < nv; ++from) {
            if (c[from] < 2) continue;
            for (int to : g.neighbors(from)) {
                std::vector<int> nc = c;
                nc[from] -= 2;
                nc[to] += 1;
                if (nc[target] >= demand) return true;
                if (visited.insert(pack(nc)).second) queue.push_back(std::move(nc));
            }
        }
    }
    return false;
}

// One full counterexample scan over a rank window of the size-k space.
ScanResult detail::scan_counterexamples(
    const Graph& g, long long k, std::optional<int> support, int target, long long demand,
    const SearchOptions& options, NodeBudget* budget,
    std::optional<std::pair<unsigned long long, unsigned long long>> window) {
    const int nv = g.vertex_count();
    const unsigned long long space = count_compositions(nv, k, support);
    unsigned long long lo = 0, hi = space;
    if (window) {
        lo = window->first;
        hi = window->second;
        if (lo > hi || hi > space)
            throw InvalidParameter("find_unsolvable: rank window out of range");
    }
    ScanResult result;
    const unsigned long long total = hi - lo;
    if (total == 0) return result;

    const bool deterministic = options.mode == SearchMode::deterministic;
    const int workers = detail::plan_workers(total, resolve_threads(options.threads), kShardSize);

    struct Ctx {
        std::unique_ptr<Solver> solver;
        Configuration buf;
        long long nodes = 0;
    };
    std::vector<Ctx> ctxs(static_cast<std::size_t>(workers));
    for (auto& c : ctxs)
        c.solver = std::make_unique<Solver>(g, target, demand, false, budget);

    auto outcome = detail::run_sharded_scan(
        total, workers, deterministic, kShardSize,
        [&](int w, unsigned long long slo, unsigned long long shi,
            const std::atomic<bool>& stop) {
            detail::ShardOutcome out;
            Ctx& ctx = ctxs[static_cast<std::size_t>(w)];
            ConfigCursor cursor(nv, k, support, lo + slo, lo + shi);
            while (cursor.next(ctx.buf.counts)) {
                if (!deterministic && stop.load(std::memory_order_relaxed)) break;
                SolveResult r = ctx.solver->solve(ctx.buf);
                ctx.nodes += r.stats.nodes_explored;
                ++out.processed;
                if (!r.solvable) {
                    out.hit = lo + slo + out.processed - 1;
                    break;
                }
                if ((out.processed & 1023) == 0 &&
                    ctx.solver->memo_size() > kMemoClearThreshold)
                    ctx.solver->clear_memo();
            }
            return out;
        });

    result.stats.configs_tested = outcome.processed;
    for (auto& c : ctxs) result.stats.solver_nodes += c.nodes;
    if (outcome.first_hit) {
        std::vector<int> counts;
        unrank_composition(nv, k, support, *outcome.first_hit, counts);
        result.witness = Configuration{std::move(counts)};
    }
    return result;
}

namespace {

struct TargetSearch {
    const Graph& g;
    int target;
    long long demand;
    const SearchOptions& options;
    NodeBudget* budget;

    ScanStats stats;
    long long lower;                        // value >= lower
    std::optional<long long> upper;         // value <= upper
    std::map<long long, std::optional<Configuration>> scanned;

    long long k_floor;                      // every k < k_floor has a stack counterexample

    TargetSearch(const Graph& g_, int target_, long long demand_,
                 const SearchOptions& options_, NodeBudget* budget_)
        : g(g_), target(target_), demand(demand_), options(options_), budget(budget_) {
        const int ecc = g.eccentricity(target);
        if (ecc > 40 || demand > (1LL << 20))
            throw InvalidParameter("target_pebbling_number: instance too large");
        k_floor = demand << ecc;
        lower = k_floor;
    }

    SearchBracket bracket() const { return SearchBracket{lower, upper}; }

    // true iff some size-k configuration is unsolvable
    bool has_counterexample(long long k) {
        if (k < k_floor) return true;   // all k on a farthest vertex falls short
        if (auto it = scanned.find(k); it != scanned.end()) return it->second.has_value();
        if (count_compositions(g.vertex_count(), k) > options.exhaustive_ceiling)
            throw BudgetExceeded("target_pebbling_number: size-" + std::to_string(k) +
                                     " configuration space exceeds the exhaustive ceiling",
                                 stats.solver_nodes, bracket());
        ScanResult r;
        try {
            r = detail::scan_counterexamples(g, k, std::nullopt, target, demand, options,
                                             budget, std::nullopt);
        } catch (const BudgetExceeded& e) {
            throw BudgetExceeded(e.what(), e.nodes_explored(), bracket());
        }
        stats.add(r.stats);
        const bool ce = r.witness.has_value();
        scanned.emplace(k, std::move(r.witness));
        if (ce)
            lower = std::max(lower, k + 1);
        else if (!upper || k < *upper)
            upper = k;
        return ce;
    }

    TargetNumber run() {
        long long probe = k_floor;
        if (options.formula_seed) {
            if (auto n = g.total_path_order(); n && *n >= 3)
                probe = std::max(probe, tpath_formula(*n, demand));
        }

        long long yes;
        if (!has_counterexample(probe)) {
            yes = probe;
        } else {
            long long step = 1, k = probe + 1;
            while (has_counterexample(k)) {
                k += step;
                step *= 2;
            }
            yes = k;
        }
        // least solvable-everywhere size in (lo, yes]; lo always has a counterexample
        long long lo = std::max(lower - 1, k_floor - 1);
        while (lo + 1 < yes) {
            long long mid = lo + (yes - lo) / 2;
            if (has_counterexample(mid))
                lo = mid;
            else
                yes = mid;
        }

        TargetNumber result;
        result.value = yes;
        // lex-first witness one below the value (scan it if the search skipped it)
        has_counterexample(yes - 1);
        if (auto it = scanned.find(yes - 1); it != scanned.end() && it->second) {
            result.witness = *it->second;
        } else {
            // only when yes-1 < k_floor: the far-stack counterexample
            std::vector<int> counts(static_cast<std::size_t>(g.vertex_count()), 0);
            int far = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.distance(v, target) > g.distance(far, target)) far = v;
            counts[static_cast<std::size_t>(far)] = static_cast<int>(yes - 1);
            result.witness = Configuration{std::move(counts)};
        }
        result.stats = stats;
        return result;
    }
};

TargetNumber target_number_impl(const Graph& g, int target, long long demand,
                                const SearchOptions& options, NodeBudget* budget) {
    if (target < 0 || target >= g.vertex_count())
        throw InvalidParameter("target_pebbling_number: target out of range");
    if (demand < 1) throw InvalidParameter("target_pebbling_number: demand must be >= 1");
    TargetSearch search(g, target, demand, options, budget);
    return search.run();
}

} // namespace

ScanResult find_unsolvable(const Graph& g, long long k, int target, long long demand,
                           const SearchOptions& options, std::optional<int> support,
                           std::optional<std::pair<unsigned long long, unsigned long long>>
                               rank_window) {
    if (target < 0 || target >= g.vertex_count())
        throw InvalidParameter("find_unsolvable: target out of range");
    if (k < 0) throw InvalidParameter("find_unsolvable: k must be >= 0");
    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);
    return detail::scan_counterexamples(g, k, support, target, demand, options,
                                        budget ? &*budget : nullptr, rank_window);
}

TargetNumber target_pebbling_number(const Graph& g, int target, long long demand,
                                    const SearchOptions& options) {
    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);
    return target_number_impl(g, target, demand, options, budget ? &*budget : nullptr);
}

PebblingNumberReport pebbling_number(const Graph& g, long long demand,
                                     const SearchOptions& options) {
    std::optional<NodeBudget> budget;
    if (options.node_budget) budget.emplace(*options.node_budget);
    return detail::pebbling_number(g, demand, options, budget ? &*budget : nullptr);
}

PebblingNumberReport detail::pebbling_number(const Graph& g, long long demand,
                                             const SearchOptions& options, NodeBudget* budget) {
    const auto start = std::chrono::steady_clock::now();
    if (demand < 1) throw InvalidParameter("pebbling_number: demand must be >= 1");

    PebblingNumberReport report;
    report.graph_name = g.name();
    report.demand = demand;
    if (auto n = g.total_path_order(); n && *n >= 3) report.formula = tpath_formula(*n, demand);

    for (int target = 0; target < g.vertex_count(); ++target) {
        TargetNumber tn;
        try {
            tn = target_number_impl(g, target, demand, options, budget);
        } catch (const BudgetExceeded& e) {
            long long lower = report.value;   // completed targets bound the max from below
            if (e.bracket()) lower = std::max(lower, e.bracket()->lower);
            throw BudgetExceeded("pebbling_number: " + std::string(e.what()) +
                                     " (while scanning target " + g.label(target) + ")",
                                 e.nodes_explored(), SearchBracket{lower, std::nullopt});
        }
        report.stats.add(tn.stats);
        if (tn.value > report.value) {
            report.value = tn.value;
            report.witness_target = target;
            report.witness = tn.witness;
        }
        report.per_target.push_back(PerTargetNumber{target, tn.value, std::move(tn.witness)});
    }
    report.wall_ms = elapsed_ms(start);
    return report;
}

} // namespace pebbling
