#include "pebbling/rng.hpp"

#include <algorithm>
#include <set>

#include "pebbling/errors.hpp"

namespace pebbling {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    // One splitmix scramble of (seed, index) so neighbouring indices do not
    // yield correlated streams.
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return g.next();
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw InvalidParameter("next_below: bound must be positive");
    if (bound == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t v = gen_.next();
        if (v < limit) return v % bound;
    }
}

std::vector<int> sample_composition_cutpoints(Rng& rng, long long total, int parts) {
    if (parts < 1) throw InvalidParameter("sample_composition: parts must be >= 1");
    if (total < 0) throw InvalidParameter("sample_composition: total must be >= 0");
    std::vector<int> out(static_cast<std::size_t>(parts), 0);
    if (parts == 1) {
        out[0] = static_cast<int>(total);
        return out;
    }
    const std::uint64_t slots = static_cast<std::uint64_t>(total) + parts - 1;
    std::set<std::uint64_t> cuts;
    while (cuts.size() + 1 < static_cast<std::size_t>(parts))
        cuts.insert(1 + rng.next_below(slots));   // distinct values in [1, slots]
    std::uint64_t prev = 0;
    int i = 0;
    for (std::uint64_t c : cuts) {
        out[i++] = static_cast<int>(c - prev - 1);
        prev = c;
    }
    out[i] = static_cast<int>(slots + 1 - prev - 1);
    return out;
}

} // namespace pebbling
