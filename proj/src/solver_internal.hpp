#pragma once

// Shared machinery of the exact chi and zeta searches. Everything here works
// on <= 64 vertices (one mask word per class).

#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <vector>

#include "ccn/graph.hpp"
#include "ccn/limits.hpp"

namespace ccn {
struct CompletionResult;
}

namespace ccn::detail {

struct MaskGraph {
    int n = 0;
    std::vector<uint64_t> adj;

    explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= uint64_t{1} << v;
            adj[v] |= uint64_t{1} << u;
        }
    }
};

// Partial assignment of vertices to colour classes, classes labelled in
// creation order. place/remove must nest like a stack.
struct PartialState {
    std::vector<int8_t> assign; // -1 = unassigned
    std::vector<uint64_t> class_bits;
    std::vector<int> class_size;
    int used = 0;
    int assigned = 0;

    PartialState(int n, int slots)
        : assign(n, int8_t{-1}), class_bits(slots, 0), class_size(slots, 0) {}

    void place(int v, int c) {
        assign[v] = static_cast<int8_t>(c);
        class_bits[c] |= uint64_t{1} << v;
        ++class_size[c];
        if (c == used) ++used;
        ++assigned;
    }

    void remove(int v, int c) {
        assign[v] = -1;
        class_bits[c] &= ~(uint64_t{1} << v);
        --class_size[c];
        if (class_size[c] == 0 && c == used - 1) --used;
        --assigned;
    }
};

// Branching choice: unassigned vertex blocked by the most classes, then
// highest degree, then lowest index. Deterministic.
inline int select_vertex(const MaskGraph& g, const PartialState& s) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
        if (s.assign[v] != -1) continue;
        int sat = 0;
        for (int c = 0; c < s.used; ++c)
            if (g.adj[v] & s.class_bits[c]) ++sat;
        int deg = std::popcount(g.adj[v]);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    return best;
}

// Relabels a complete assignment by first occurrence in vertex order
// (restricted-growth form).
inline std::vector<int> canonical_assignment(const std::vector<int8_t>& assign,
                                             int used) {
    std::vector<int> relabel(used, -1);
    std::vector<int> out(assign.size());
    int next = 0;
    for (size_t v = 0; v < assign.size(); ++v) {
        int c = assign[v];
        if (relabel[c] == -1) relabel[c] = next++;
        out[v] = relabel[c];
    }
    return out;
}

// Least final sum of squared class sizes reachable from s when the remaining
// m vertices are spread without adjacency constraints: each goes onto a
// current minimum (exchange-optimal). Returns -1 when the partition cannot
// reach chi non-empty classes.
inline long long min_final_square_sum(const PartialState& s, int chi, int m) {
    if (m < chi - s.used) return -1;
    int sizes[64];
    for (int c = 0; c < chi; ++c) sizes[c] = c < s.used ? s.class_size[c] : 0;
    for (int i = 0; i < m; ++i) {
        int arg = 0;
        for (int c = 1; c < chi; ++c)
            if (sizes[c] < sizes[arg]) arg = c;
        ++sizes[arg];
    }
    long long sq = 0;
    for (int c = 0; c < chi; ++c)
        sq += static_cast<long long>(sizes[c]) * sizes[c];
    return sq;
}

// Best incumbent: maximum gain, ties resolved to the lexicographically least
// canonical assignment. offer() is order-independent, so merging incumbents
// from any exploration order gives one result.
struct Incumbent {
    long long best_gain = LLONG_MIN;
    std::vector<int> best_assignment;
    bool collect = false;
    std::vector<std::vector<int>> optima; // gain == best_gain, collect mode

    void offer(long long gain, std::vector<int> canonical) {
        if (gain > best_gain) {
            best_gain = gain;
            best_assignment = canonical;
            if (collect) {
                optima.clear();
                optima.push_back(std::move(canonical));
            }
        } else if (gain == best_gain) {
            if (canonical < best_assignment) best_assignment = canonical;
            if (collect) optima.push_back(std::move(canonical));
        }
    }
};

struct SearchStats {
    long long explored = 0;
    bool aborted = false;
};

// Depth-first gain maximization over partitions into exactly chi independent
// classes. Prunes subtrees whose balanced-completion bound is strictly below
// the incumbent, so every optimal partition is visited.
class ZetaDfs {
public:
    ZetaDfs(const MaskGraph& g, int chi, long long eps,
            std::chrono::steady_clock::time_point deadline, bool has_deadline)
        : g_(g), chi_(chi), eps_(eps), deadline_(deadline),
          has_deadline_(has_deadline) {}

    void run(PartialState& s, Incumbent& inc, SearchStats& stats) const;

    // Children of s in class order; leaf states yield their gain instead.
    // Used by the breadth-first splitter of the parallel kernel.
    long long leaf_gain(const PartialState& s) const;
    long long bound_gain(const PartialState& s) const;

private:
    void dfs(PartialState& s, Incumbent& inc, SearchStats& stats) const;

    const MaskGraph& g_;
    int chi_;
    long long eps_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
};

// Exact chromatic number plus one proper colouring witnessing it.
std::pair<int, std::vector<int>> chi_with_witness(const Graph& g,
                                                  const SolverLimits& limits);

// Proper chi-colouring biased towards balanced classes: saturation order,
// smallest feasible class. Empty on a dead end.
std::vector<int> balanced_greedy_coloring(const MaskGraph& g, int chi);

// Incumbent holding the chi witness plus the balanced greedy colouring.
// Every search starts from this, which is what makes the explored count a
// pure function of the instance.
Incumbent make_seed_incumbent(const MaskGraph& mg, int chi,
                              const std::vector<int>& chi_witness,
                              long long eps, bool collect);

void merge_incumbent(Incumbent& into, const Incumbent& from);

// Turns the final incumbent into a CompletionResult (witness colouring,
// completion edge list, pseudo size).
ccn::CompletionResult package_result(const Graph& g, const Incumbent& inc,
                                     bool exact, long long explored);

} // namespace ccn::detail
