#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace ccn {

// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; safe to share across threads.
class Graph {
public:
    /// Edgeless graph on n vertices. n >= 1.
    explicit Graph(int order);

    /// Builds from an edge list. Reversed duplicates are merged; self-loops
    /// and out-of-range endpoints throw std::invalid_argument.
    Graph(int order, const std::vector<Edge>& edge_list);

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;

    /// Sorted neighbour list of v.
    const std::vector<int>& neighbors(int v) const;

    /// All edges in ascending lexicographic order.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Graph on the same vertices whose edges are exactly the non-edges.
    Graph complement() const;

    bool is_complete() const;

    /// Part sizes (ascending) when the graph is complete multipartite,
    /// std::nullopt otherwise. A graph qualifies when non-adjacency is an
    /// equivalence relation and every cross-part pair is an edge.
    std::optional<std::vector<int>> complete_multipartite_parts() const;

    /// Structural equality: same order and same edge set.
    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

} // namespace ccn
