#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pebbling {

/// Immutable connected simple graph with labeled vertices and a precomputed
/// all-pairs distance matrix. Vertex identity is the dense index 0..n-1;
/// labels are presentation only. Instances are safe to share across threads.
class Graph {
public:
    static Graph make(std::vector<std::string> labels,
                      std::vector<std::pair<int, int>> edges,
                      std::string name);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    // Edges as (u, v) pairs with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int distance(int u, int v) const { return distances_[static_cast<std::size_t>(u) * adjacency_.size() + v]; }
    int eccentricity(int v) const;
    bool adjacent(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> vertex_by_label(std::string_view label) const;
    int require_vertex(std::string_view label) const;   // throws InvalidParameter

    // Display/report name, e.g. "T(P:4)".
    const std::string& name() const { return name_; }

    // Set when this graph was built as the total graph of the n-vertex path;
    // used only to seed searches with the closed-form candidate.
    std::optional<int> total_path_order() const { return total_path_order_; }

private:
    Graph() = default;

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> distances_;
    std::string name_;
    std::optional<int> total_path_order_;

    friend Graph total_graph(const Graph&);
};

Graph build_path(int n);       // labels x1..xn
Graph build_cycle(int n);      // labels v1..vn, n >= 3
Graph build_complete(int n);   // labels v1..vn

/// Total graph T(g): one vertex per vertex and per edge of g; adjacency for
/// adjacent vertices, adjacent edges, and incident vertex-edge pairs.
/// When g is the canonical path x1..xn the edge vertices are labeled y12,
/// y23, ... (comma-separated indices once either index reaches 10);
/// otherwise they are labeled e(u,v) with endpoint labels sorted.
Graph total_graph(const Graph& g);

/// Cartesian product: vertices V(g) x V(h), edges join pairs equal in one
/// coordinate and adjacent in the other. Labels "(gu,hv)", g-major order.
Graph cartesian_product(const Graph& g, const Graph& h);

// Plain-text edge list: first line "n m", then m lines "u v" (0-based),
// then an optional comma-separated labels line.
Graph read_edge_list(std::istream& in, std::string name = "imported");
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace pebbling
