#pragma once

// Test-only brute force oracles. Everything here enumerates raw colour
// assignments directly so it stays independent of the library's search and
// enumeration code paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ccn/graph.hpp"

namespace testutil {

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

// Visits every assignment of k labels to n positions.
template <typename F>
void for_each_assignment(int n, int k, F&& f) {
    std::vector<int> labels(n, 0);
    while (true) {
        f(labels);
        int i = 0;
        while (i < n && ++labels[i] == k) labels[i++] = 0;
        if (i == n) break;
    }
}

inline bool proper_assignment(const ccn::Graph& g,
                              const std::vector<int>& labels) {
    for (const auto& [u, v] : g.edges())
        if (labels[u] == labels[v]) return false;
    return true;
}

inline bool uses_all_labels(const std::vector<int>& labels, int k) {
    std::vector<char> seen(k, 0);
    for (int c : labels) seen[c] = 1;
    return std::find(seen.begin(), seen.end(), char{0}) == seen.end();
}

inline int naive_chromatic_number(const ccn::Graph& g) {
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_assignment(g.order(), k, [&](const std::vector<int>& labels) {
            if (!found && proper_assignment(g, labels)) found = true;
        });
        if (found) return k;
    }
}

inline long long count_proper_surjective(const ccn::Graph& g, int k) {
    long long count = 0;
    for_each_assignment(g.order(), k, [&](const std::vector<int>& labels) {
        if (proper_assignment(g, labels) && uses_all_labels(labels, k))
            ++count;
    });
    return count;
}

inline std::vector<int> rgs_of(const std::vector<int>& labels) {
    std::vector<int> relabel;
    std::vector<int> out(labels.size());
    for (size_t v = 0; v < labels.size(); ++v) {
        auto it = std::find(relabel.begin(), relabel.end(), labels[v]);
        if (it == relabel.end()) {
            relabel.push_back(labels[v]);
            out[v] = static_cast<int>(relabel.size()) - 1;
        } else {
            out[v] = static_cast<int>(it - relabel.begin());
        }
    }
    return out;
}

// Distinct partitions into exactly k non-empty independent classes, as
// sorted canonical assignments.
inline std::vector<std::vector<int>> naive_chromatic_partitions(
    const ccn::Graph& g, int k) {
    std::vector<std::vector<int>> found;
    for_each_assignment(g.order(), k, [&](const std::vector<int>& labels) {
        if (proper_assignment(g, labels) && uses_all_labels(labels, k))
            found.push_back(rgs_of(labels));
    });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// Max pairwise class-size product sum minus the edge count, over all
// chromatic partitions.
inline long long naive_zeta(const ccn::Graph& g) {
    int k = naive_chromatic_number(g);
    long long eps = g.size();
    long long best = -1;
    for_each_assignment(g.order(), k, [&](const std::vector<int>& labels) {
        if (!proper_assignment(g, labels) || !uses_all_labels(labels, k))
            return;
        std::vector<long long> theta(k, 0);
        for (int c : labels) ++theta[c];
        long long pairs = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) pairs += theta[i] * theta[j];
        best = std::max(best, pairs - eps);
    });
    return best;
}

// Connected labelled graph: a random spanning tree plus random extra pairs.
inline ccn::Graph random_connected_graph(Rng& rng, int n) {
    std::vector<ccn::Edge> edges;
    for (int v = 1; v < n; ++v) {
        int parent = rng.below(v);
        edges.emplace_back(parent, v);
    }
    int slots = n * (n - 1) / 2 - (n - 1);
    int extra = slots > 0 ? rng.below(slots + 1) : 0;
    for (int i = 0; i < extra; ++i) {
        int u = rng.below(n);
        int v = rng.below(n);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return ccn::Graph(n, edges); // duplicates merge in the constructor
}

} // namespace testutil
