#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Pebble counts per vertex. total() is the number of pebbles, support()
/// the number of occupied vertices (q).
struct Configuration {
    std::vector<int> counts;

    long long total() const {
        long long s = 0;
        for (int c : counts) s += c;
        return s;
    }

    int support() const {
        int q = 0;
        for (int c : counts) q += c > 0;
        return q;
    }

    bool operator==(const Configuration&) const = default;
};

struct Move {
    int from = 0;
    int to = 0;
    bool operator==(const Move&) const = default;
};

// Length matches the graph, all entries non-negative; throws InvalidParameter.
void validate_config(const Graph& g, const Configuration& config);

// A pebbling move: remove two pebbles from `from`, place one on adjacent `to`.
// Throws IllegalMove on insufficient pebbles or a non-adjacent pair.
Configuration apply_move(const Graph& g, const Configuration& config, Move move);

// Text format: comma-separated label:count pairs, omitted labels mean zero,
// e.g. "x4:7,y23:1". Labels may themselves contain commas (e.g. "y9,10");
// a segment without ':' belongs to the label that follows it.
Configuration parse_config(const Graph& g, std::string_view text);

// Canonical text: occupied vertices only, ascending index order.
std::string format_config(const Graph& g, const Configuration& config);

} // namespace pebbling
