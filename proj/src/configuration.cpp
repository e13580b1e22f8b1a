#include "pebbling/configuration.hpp"

#include <cctype>
#include <charconv>

#include "pebbling/errors.hpp"

namespace pebbling {

void validate_config(const Graph& g, const Configuration& config) {
    if (static_cast<int>(config.counts.size()) != g.vertex_count())
        throw InvalidParameter("configuration length " + std::to_string(config.counts.size()) +
                               " does not match graph order " + std::to_string(g.vertex_count()));
    for (int c : config.counts)
        if (c < 0) throw InvalidParameter("configuration has a negative count");
}

Configuration apply_move(const Graph& g, const Configuration& config, Move move) {
    validate_config(g, config);
    const int n = g.vertex_count();
    if (move.from < 0 || move.from >= n || move.to < 0 || move.to >= n)
        throw IllegalMove("move endpoint out of range");
    if (!g.adjacent(move.from, move.to))
        throw IllegalMove("move " + g.label(move.from) + "->" + g.label(move.to) +
                          ": vertices are not adjacent");
    if (config.counts[move.from] < 2)
        throw IllegalMove("move " + g.label(move.from) + "->" + g.label(move.to) +
                          ": needs 2 pebbles, has " + std::to_string(config.counts[move.from]));
    Configuration next = config;
    next.counts[move.from] -= 2;
    next.counts[move.to] += 1;
    return next;
}

namespace {

void trim(std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
}

} // namespace

Configuration parse_config(const Graph& g, std::string_view text) {
    Configuration config;
    config.counts.assign(g.vertex_count(), 0);
    std::vector<char> seen(config.counts.size(), 0);

    if (text.find_first_not_of(" \t") == std::string_view::npos) return config;

    // Comma-separated pieces; a piece without ':' is the front of a label
    // that itself contains a comma (such as "y9,10") and joins the next piece.
    std::vector<std::pair<std::string, std::size_t>> pieces;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::size_t len = comma == std::string_view::npos ? text.size() - pos : comma - pos;
        pieces.emplace_back(std::string(text.substr(pos, len)), pos);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }

    std::size_t i = 0;
    while (i < pieces.size()) {
        std::string entry = pieces[i].first;
        const std::size_t start = pieces[i].second;
        ++i;
        while (entry.find(':') == std::string::npos && i < pieces.size()) {
            entry += "," + pieces[i].first;
            ++i;
        }
        std::size_t colon = entry.rfind(':');
        if (colon == std::string::npos)
            throw ParseError("configuration: entry '" + entry + "' has no count", start);

        std::string label = entry.substr(0, colon);
        std::string count_text = entry.substr(colon + 1);
        trim(label);
        trim(count_text);
        if (label.empty()) throw ParseError("configuration: empty label", start);
        auto v = g.vertex_by_label(label);
        if (!v) throw ParseError("configuration: unknown label '" + label + "'", start);
        int count = 0;
        auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
        if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 0)
            throw ParseError("configuration: bad count '" + count_text + "'", start);
        if (seen[*v])
            throw ParseError("configuration: label '" + label + "' given twice", start);
        seen[*v] = 1;
        config.counts[*v] = count;
    }
    return config;
}

std::string format_config(const Graph& g, const Configuration& config) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (config.counts[v] <= 0) continue;
        if (!out.empty()) out += ',';
        out += g.label(v) + ":" + std::to_string(config.counts[v]);
    }
    return out;
}

} // namespace pebbling
