#include "ccn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccn {

namespace {

std::vector<std::vector<int>> build_adjacency(int order,
                                              const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(order);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

} // namespace

Graph::Graph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.resize(order_);
}

Graph::Graph(int order, const std::vector<Edge>& edge_list) : order_(order) {
    if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= order_ || b < 0 || b >= order_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(a));
        edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_ = build_adjacency(order_, edges_);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
    int d = order_;
    for (int v = 0; v < order_; ++v)
        d = std::min(d, static_cast<int>(adj_[v].size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v)
        d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph Graph::complement() const {
    std::vector<Edge> rest;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v))
                rest.emplace_back(u, v);
    return Graph(order_, rest);
}

bool Graph::is_complete() const {
    return static_cast<long long>(size()) ==
           static_cast<long long>(order_) * (order_ - 1) / 2;
}

std::optional<std::vector<int>> Graph::complete_multipartite_parts() const {
    // Group vertices so that u, v share a group iff they are non-adjacent,
    // then verify the grouping is consistent on every pair.
    std::vector<int> part(order_, -1);
    int parts = 0;
    for (int v = 0; v < order_; ++v) {
        if (part[v] != -1) continue;
        part[v] = parts;
        for (int u = v + 1; u < order_; ++u)
            if (part[u] == -1 &&
                !std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                part[u] = parts;
        ++parts;
    }
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v) {
            bool adjacent = std::binary_search(adj_[u].begin(), adj_[u].end(), v);
            if (adjacent == (part[u] == part[v])) return std::nullopt;
        }
    std::vector<int> sizes(parts, 0);
    for (int v = 0; v < order_; ++v) ++sizes[part[v]];
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool Graph::operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
}

} // namespace ccn
