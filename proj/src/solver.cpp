#include "pebbling/solver.hpp"

#include <algorithm>
#include <limits>

#include "pebbling/errors.hpp"

namespace pebbling {

namespace {

constexpr int kMaxScaleLog2 = 40;        // eccentricity limit for exact shifts
constexpr long long kMaxDemand = 1LL << 40;
constexpr long long kMaxSolverTotal = 255;   // counts pack into one byte each
constexpr long long kBudgetBatch = 1024;

} // namespace

PotentialValue potential(const Graph& g, const Configuration& config, int target) {
    validate_config(g, config);
    if (target < 0 || target >= g.vertex_count())
        throw InvalidParameter("potential: target out of range");
    const int dmax = g.eccentricity(target);
    if (dmax > kMaxScaleLog2)
        throw InvalidParameter("potential: graph eccentricity too large for exact arithmetic");
    unsigned __int128 num = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        num += static_cast<unsigned __int128>(config.counts[v]) << (dmax - g.distance(v, target));
    if (num > std::numeric_limits<unsigned long long>::max())
        throw InvalidParameter("potential: numerator overflow");
    return PotentialValue{static_cast<unsigned long long>(num), dmax};
}

bool potential_at_least(const PotentialValue& p, long long demand) {
    if (demand <= 0) return true;
    return static_cast<unsigned __int128>(p.numerator) >=
           (static_cast<unsigned __int128>(demand) << p.scale_log2);
}

long long NodeBudget::take_batch(long long want) {
    long long prev = remaining_.fetch_sub(want);
    if (prev <= 0) return 0;
    return std::min(prev, want);
}

Solver::Solver(const Graph& g, int target, long long demand,
               bool want_certificate, NodeBudget* budget)
    : graph_(g), target_(target), demand_(demand),
      want_certificate_(want_certificate), budget_(budget),
      n_(g.vertex_count()) {
    if (target_ < 0 || target_ >= n_) throw InvalidParameter("solver: target out of range");
    if (demand_ < 0) throw InvalidParameter("solver: demand must be non-negative");
    if (demand_ > kMaxDemand) throw InvalidParameter("solver: demand too large");

    dist_.resize(n_);
    next_hop_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
        dist_[v] = g.distance(v, target_);
        dmax_ = std::max(dmax_, dist_[v]);
    }
    for (int v = 0; v < n_; ++v) {
        if (v == target_) continue;
        for (int u : g.neighbors(v))
            if (dist_[u] == dist_[v] - 1) { next_hop_[v] = u; break; }
    }
    if (dmax_ > kMaxScaleLog2)
        throw InvalidParameter("solver: graph eccentricity too large for exact arithmetic");
    packed_keys_ = n_ <= 16;
}

void Solver::clear_memo() {
    memo_packed_.clear();
    memo_bytes_.clear();
}

std::size_t Solver::memo_size() const {
    return packed_keys_ ? memo_packed_.size() : memo_bytes_.size();
}

void Solver::tick_budget() {
    ++stats_.nodes_explored;
    if (!budget_) return;
    if (local_quota_ > 0) { --local_quota_; return; }
    long long granted = budget_->take_batch(kBudgetBatch);
    if (granted == 0)
        throw BudgetExceeded("solver node budget exhausted", stats_.nodes_explored);
    local_quota_ = granted - 1;
}

bool Solver::potential_below_demand() const {
    unsigned __int128 num = 0;
    for (int v = 0; v < n_; ++v)
        num += static_cast<unsigned __int128>(counts_[v]) << (dmax_ - dist_[v]);
    return num < (static_cast<unsigned __int128>(demand_) << dmax_);
}

bool Solver::single_stack_covers(long long need) {
    for (int v = 0; v < n_; ++v) {
        if (v == target_ || counts_[v] < 2) continue;
        if (static_cast<unsigned __int128>(counts_[v]) >=
            (static_cast<unsigned __int128>(need) << dist_[v])) {
            if (want_certificate_) emit_stack_certificate(v, need);
            return true;
        }
    }
    return false;
}

// Walk the stack down a shortest path, halving at each hop; delivers exactly
// `need` to the target using need*2^d pebbles from v.
void Solver::emit_stack_certificate(int v, long long need) {
    long long carry = need << dist_[v];
    int at = v;
    while (at != target_) {
        int nxt = next_hop_[at];
        for (long long i = 0; i < carry / 2; ++i) trail_.push_back(Move{at, nxt});
        carry /= 2;
        at = nxt;
    }
}

bool Solver::greedy_reaches() {
    scratch_ = counts_;
    if (want_certificate_) greedy_moves_.clear();
    for (;;) {
        if (scratch_[target_] >= demand_) {
            if (want_certificate_)
                trail_.insert(trail_.end(), greedy_moves_.begin(), greedy_moves_.end());
            return true;
        }
        // farthest vertex that can still move, lowest index on ties
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (v == target_ || scratch_[v] < 2) continue;
            if (best < 0 || dist_[v] > dist_[best]) best = v;
        }
        if (best < 0) return false;
        int nxt = next_hop_[best];
        scratch_[best] -= 2;
        scratch_[nxt] += 1;
        if (want_certificate_) greedy_moves_.push_back(Move{best, nxt});
    }
}

bool Solver::memo_contains() {
    if (packed_keys_) {
        unsigned __int128 key = 0;
        for (int v = 0; v < n_; ++v) key = (key << 8) | static_cast<unsigned>(counts_[v]);
        return memo_packed_.contains(key);
    }
    std::string key(counts_.begin(), counts_.end());
    return memo_bytes_.contains(key);
}

void Solver::memo_insert() {
    if (packed_keys_) {
        unsigned __int128 key = 0;
        for (int v = 0; v < n_; ++v) key = (key << 8) | static_cast<unsigned>(counts_[v]);
        memo_packed_.insert(key);
    } else {
        memo_bytes_.insert(std::string(counts_.begin(), counts_.end()));
    }
}

bool Solver::dfs() {
    tick_budget();

    const long long need = demand_ - counts_[target_];
    if (need <= 0) return true;
    if (single_stack_covers(need)) {
        ++stats_.fastpath_stack;
        return true;
    }
    if (potential_below_demand()) {
        ++stats_.pruned_potential;
        return false;
    }
    if (memo_contains()) {
        ++stats_.memo_hits;
        return false;
    }
    if (greedy_reaches()) {
        ++stats_.fastpath_greedy;
        return true;
    }

    // Branch: distance-decreasing destinations first, then the rest, each
    // class in (from, to) order. Moves out of the target are never useful.
    for (int pass = 0; pass < 2; ++pass) {
        for (int from = 0; from < n_; ++from) {
            if (from == target_ || counts_[from] < 2) continue;
            for (int to : graph_.neighbors(from)) {
                const bool closer = dist_[to] < dist_[from];
                if (closer != (pass == 0)) continue;
                counts_[from] -= 2;
                counts_[to] += 1;
                const std::size_t mark = trail_.size();
                if (want_certificate_) trail_.push_back(Move{from, to});
                if (dfs()) {
                    counts_[from] += 2;
                    counts_[to] -= 1;
                    return true;
                }
                if (want_certificate_) trail_.resize(mark);
                counts_[from] += 2;
                counts_[to] -= 1;
            }
        }
    }

    memo_insert();
    return false;
}

SolveResult Solver::solve(const Configuration& config) {
    validate_config(graph_, config);
    stats_ = SolveStats{};
    trail_.clear();

    SolveResult result;
    // demand already on the target needs no moves at all (and no size guard)
    if (config.counts[target_] >= demand_) {
        result.solvable = true;
        if (want_certificate_) result.certificate = std::vector<Move>{};
        result.stats = stats_;
        return result;
    }
    if (config.total() > kMaxSolverTotal)
        throw InvalidParameter("solver: configurations above " +
                               std::to_string(kMaxSolverTotal) + " pebbles are not supported");

    counts_ = config.counts;
    result.solvable = dfs();
    if (result.solvable && want_certificate_) result.certificate = trail_;
    result.stats = stats_;
    return result;
}

SolveResult is_solvable(const Graph& g, const Configuration& config, int target,
                        long long demand, bool want_certificate,
                        std::optional<long long> node_budget) {
    std::optional<NodeBudget> budget;
    if (node_budget) {
        if (*node_budget <= 0) throw InvalidParameter("node budget must be positive");
        budget.emplace(*node_budget);
    }
    Solver solver(g, target, demand, want_certificate, budget ? &*budget : nullptr);
    return solver.solve(config);
}

bool verify_certificate(const Graph& g, const Configuration& config,
                        const std::vector<Move>& certificate, int target,
                        long long demand, std::string* diagnostic) {
    if (target < 0 || target >= g.vertex_count()) {
        if (diagnostic) *diagnostic = "target out of range";
        return false;
    }
    Configuration current = config;
    for (std::size_t i = 0; i < certificate.size(); ++i) {
        try {
            current = apply_move(g, current, certificate[i]);
        } catch (const Error& e) {
            if (diagnostic) *diagnostic = "step " + std::to_string(i) + ": " + e.what();
            return false;
        }
    }
    if (current.counts[target] < demand) {
        if (diagnostic)
            *diagnostic = "final configuration has " + std::to_string(current.counts[target]) +
                          " pebbles on target, needs " + std::to_string(demand);
        return false;
    }
    if (diagnostic) diagnostic->clear();
    return true;
}

} // namespace pebbling
