#include "pebbling/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "pebbling/errors.hpp"

namespace pebbling {

namespace {

constexpr int kMaxVertices = 100000;

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

// Is g exactly the canonical path x1..xn (labels and consecutive edges)?
std::optional<int> canonical_path_order(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        if (g.label(i) != "x" + std::to_string(i + 1)) return std::nullopt;
        if (i + 1 < n && !g.adjacent(i, i + 1)) return std::nullopt;
    }
    return n;
}

// y12, y23, ... with comma-separated indices once an index needs two digits.
std::string path_edge_label(int i, int j) {
    std::string a = std::to_string(i), b = std::to_string(j);
    if (j >= 10) return "y" + a + "," + b;
    return "y" + a + b;
}

} // namespace

Graph Graph::make(std::vector<std::string> labels,
                  std::vector<std::pair<int, int>> edges,
                  std::string name) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw InvalidParameter("graph must have at least one vertex");
    if (n > kMaxVertices) throw InvalidParameter("graph too large");
    {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidParameter("vertex labels must be unique");
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.name_ = std::move(name);
    g.adjacency_.assign(n, {});

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidParameter("edge endpoint out of range");
        if (u == v) throw InvalidParameter("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidParameter("duplicate edge");
    g.edges_ = std::move(edges);

    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

    g.distances_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist = bfs_distances(g.adjacency_, v);
        for (int u = 0; u < n; ++u) {
            if (dist[u] < 0)
                throw InvalidParameter("graph is not connected; pebbling numbers are undefined");
            g.distances_[static_cast<std::size_t>(v) * n + u] = dist[u];
        }
    }
    return g;
}

int Graph::eccentricity(int v) const {
    const int n = vertex_count();
    int ecc = 0;
    for (int u = 0; u < n; ++u) ecc = std::max(ecc, distance(v, u));
    return ecc;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::vertex_by_label(std::string_view label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

int Graph::require_vertex(std::string_view label) const {
    if (auto v = vertex_by_label(label)) return *v;
    throw InvalidParameter("unknown vertex label '" + std::string(label) + "' in graph " + name_);
}

Graph build_path(int n) {
    if (n < 1) throw InvalidParameter("path order must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(std::move(labels), std::move(edges), "P:" + std::to_string(n));
}

Graph build_cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle order must be >= 3");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::make(std::move(labels), std::move(edges), "C:" + std::to_string(n));
}

Graph build_complete(int n) {
    if (n < 1) throw InvalidParameter("complete graph order must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::make(std::move(labels), std::move(edges), "K:" + std::to_string(n));
}

Graph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const auto& ge = g.edges();
    const int m = static_cast<int>(ge.size());
    const std::optional<int> path_order = canonical_path_order(g);

    std::vector<std::string> labels = g.labels();
    for (int e = 0; e < m; ++e) {
        auto [u, v] = ge[e];
        if (path_order) {
            labels.push_back(path_edge_label(u + 1, v + 1));
        } else {
            std::string a = g.label(u), b = g.label(v);
            if (b < a) std::swap(a, b);
            labels.push_back("e(" + a + "," + b + ")");
        }
    }

    std::vector<std::pair<int, int>> edges;
    // adjacent vertices
    for (auto [u, v] : ge) edges.emplace_back(u, v);
    // incident vertex-edge pairs
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(ge[e].first, n + e);
        edges.emplace_back(ge[e].second, n + e);
    }
    // adjacent edges (shared endpoint)
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = ge[e];
            auto [c, d] = ge[f];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(n + e, n + f);
        }

    Graph t = Graph::make(std::move(labels), std::move(edges), "T(" + g.name() + ")");
    t.total_path_order_ = path_order;
    return t;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");

    auto idx = [nh](int a, int b) { return a * nh + b; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ng; ++a)
        for (auto [b, c] : h.edges()) edges.emplace_back(idx(a, b), idx(a, c));
    for (int b = 0; b < nh; ++b)
        for (auto [a, c] : g.edges()) edges.emplace_back(idx(a, b), idx(c, b));

    return Graph::make(std::move(labels), std::move(edges),
                       "X(" + g.name() + "," + h.name() + ")");
}

Graph read_edge_list(std::istream& in, std::string name) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header 'n m'", 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected edge line 'u v' #" + std::to_string(i), 0);
        edges.emplace_back(u, v);
    }
    std::string rest;
    std::getline(in, rest);   // finish the last edge line
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.erase(item.begin());
            while (!item.empty() && (item.back() == ' ' || item.back() == '\r' || item.back() == '\t')) item.pop_back();
            labels.push_back(item);
        }
        break;
    }
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    if (static_cast<int>(labels.size()) != n)
        throw ParseError("edge list: labels line has " + std::to_string(labels.size()) +
                             " entries, expected " + std::to_string(n), 0);
    return Graph::make(std::move(labels), std::move(edges), std::move(name));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        out << (v ? "," : "") << g.label(v);
    out << '\n';
}

} // namespace pebbling
