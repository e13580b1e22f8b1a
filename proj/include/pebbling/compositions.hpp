#pragma once

#include <optional>
#include <vector>

namespace pebbling {

// C(n, k) saturating at UINT64_MAX.
unsigned long long binomial_capped(unsigned long long n, unsigned long long k);

/// Number of weak compositions of `total` into `parts` parts; with `support`
/// set, only compositions with exactly that many positive parts:
/// C(parts, q) * C(total-1, q-1). Saturates at UINT64_MAX.
unsigned long long count_compositions(int parts, long long total,
                                      std::optional<int> support = std::nullopt);

// Composition at `rank` in ascending lexicographic order.
void unrank_composition(int parts, long long total, std::optional<int> support,
                        unsigned long long rank, std::vector<int>& out);

/// Streams weak compositions of `total` into `parts` parts in ascending
/// lexicographic order, optionally restricted to a fixed support size and to
/// a [begin, end) rank window for sharding. Each composition is produced
/// exactly once.
class ConfigCursor {
public:
    ConfigCursor(int parts, long long total, std::optional<int> support = std::nullopt);
    ConfigCursor(int parts, long long total, std::optional<int> support,
                 unsigned long long begin_rank, unsigned long long end_rank);

    // Fills `out` with the next composition; false when the window is done.
    bool next(std::vector<int>& out);

    unsigned long long size() const { return size_; }

private:
    int parts_;
    long long total_;
    std::optional<int> support_;
    unsigned long long begin_;
    unsigned long long size_;
    unsigned long long produced_ = 0;
    std::vector<int> current_;
};

} // namespace pebbling
