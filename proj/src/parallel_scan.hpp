#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace pebbling::detail {

struct ShardOutcome {
    std::optional<unsigned long long> hit;   // lowest hit rank inside the shard
    unsigned long long processed = 0;
};

struct ScanOutcome {
    std::optional<unsigned long long> first_hit;
    unsigned long long processed = 0;
};

inline int plan_workers(unsigned long long total, int threads, unsigned long long shard_size) {
    unsigned long long shards = (total + shard_size - 1) / shard_size;
    return static_cast<int>(std::max<unsigned long long>(
        1, std::min<unsigned long long>(static_cast<unsigned long long>(threads), shards)));
}

// Runs `run_shard(worker, lo, hi, stop)` over [0, total) split into fixed-size
// shards. Deterministic mode assigns shard s to worker s % workers and runs
// every shard; a shard may still stop at its own first hit, since later ranks
// in the same shard cannot beat it and shards are contiguous ascending
// windows, so the minimum over shard hits is the global first hit. Fast mode
// hands out shards dynamically and stops everything at the first hit found.
template <class RunShard>
ScanOutcome run_sharded_scan(unsigned long long total, int workers, bool deterministic,
                             unsigned long long shard_size, RunShard&& run_shard) {
    ScanOutcome outcome;
    if (total == 0) return outcome;
    const unsigned long long shards = (total + shard_size - 1) / shard_size;

    std::atomic<bool> stop{false};
    std::atomic<unsigned long long> next_shard{0};
    std::vector<std::optional<unsigned long long>> hits(workers);
    std::vector<unsigned long long> processed(workers, 0);
    std::vector<std::exception_ptr> errors(workers);

    auto worker_fn = [&](int w) {
        try {
            if (deterministic) {
                for (unsigned long long s = static_cast<unsigned long long>(w); s < shards;
                     s += static_cast<unsigned long long>(workers)) {
                    if (stop.load(std::memory_order_relaxed)) break;   // only set on error
                    const unsigned long long lo = s * shard_size;
                    const unsigned long long hi = std::min(total, lo + shard_size);
                    ShardOutcome r = run_shard(w, lo, hi, stop);
                    processed[w] += r.processed;
                    if (r.hit) {
                        // this worker's later shards hold only higher ranks
                        hits[w] = r.hit;
                        break;
                    }
                }
            } else {
                for (;;) {
                    if (stop.load(std::memory_order_relaxed)) break;
                    const unsigned long long s = next_shard.fetch_add(1);
                    if (s >= shards) break;
                    const unsigned long long lo = s * shard_size;
                    const unsigned long long hi = std::min(total, lo + shard_size);
                    ShardOutcome r = run_shard(w, lo, hi, stop);
                    processed[w] += r.processed;
                    if (r.hit) {
                        if (!hits[w] || *r.hit < *hits[w]) hits[w] = r.hit;
                        stop.store(true, std::memory_order_relaxed);
                        break;
                    }
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
        }
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (int w = 0; w < workers; ++w) {
        outcome.processed += processed[w];
        if (hits[w] && (!outcome.first_hit || *hits[w] < *outcome.first_hit))
            outcome.first_hit = hits[w];
    }
    return outcome;
}

} // namespace pebbling::detail
