#include "ccn/completion.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace ccn {

long long completion_gain(const std::vector<int>& theta, long long eps) {
    long long sum = 0;
    for (size_t i = 0; i < theta.size(); ++i)
        for (size_t j = i + 1; j < theta.size(); ++j)
            sum += static_cast<long long>(theta[i]) * theta[j];
    return sum - eps;
}

Graph pseudo_completion_graph(const Coloring& col) {
    const auto& a = col.assignment();
    const int n = col.size();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[u] != a[v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

long long zeta_exhaustive(const Graph& g) {
    if (g.order() > 10)
        throw GuardError("exhaustive zeta guard is order <= 10, got " +
                         std::to_string(g.order()));
    const long long eps = g.size();
    long long best = 0;
    bool first = true;
    for_each_chromatic_partition(g, [&](const Coloring& col) {
        long long gain = completion_gain(col.class_sizes(), eps);
        if (first || gain > best) best = gain;
        first = false;
        return true;
    });
    return best;
}

std::vector<Edge> completion_edges(const Graph& g, const Coloring& col,
                                   const SolverLimits& limits) {
    if (!bad_edges(g, col).empty())
        throw std::invalid_argument("colouring is improper on this graph");
    int chi = chromatic_number(g, limits);
    if (col.class_count() != chi)
        throw std::invalid_argument("colouring uses " +
                                    std::to_string(col.class_count()) +
                                    " classes, chromatic number is " +
                                    std::to_string(chi));
    const auto& a = col.assignment();
    std::vector<Edge> extra;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (a[u] != a[v] && !g.has_edge(u, v)) extra.emplace_back(u, v);
    return extra;
}

Graph completion_graph(const Graph& g, const Coloring& col,
                       const SolverLimits& limits) {
    std::vector<Edge> edges = g.edges();
    for (const auto& e : completion_edges(g, col, limits)) edges.push_back(e);
    return Graph(g.order(), edges);
}

long long completion_upper_bound(const Graph& g) {
    return static_cast<long long>(g.order()) * (g.order() - 1) / 2 - g.size();
}

std::string to_json(const CompletionResult& result) {
    nlohmann::ordered_json doc;
    doc["zeta"] = result.zeta;
    doc["exact"] = result.exact;
    doc["classes"] = result.witness.classes();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : result.completion_edges)
        edges.push_back({u, v});
    doc["completion_edges"] = std::move(edges);
    doc["explored"] = result.explored;
    return doc.dump();
}

} // namespace ccn
