#include <algorithm>
#include <chrono>
#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccn/completion.hpp"
#include "solver_internal.hpp"

namespace ccn {

namespace {

using detail::Incumbent;
using detail::MaskGraph;
using detail::PartialState;
using detail::SearchStats;
using detail::ZetaDfs;

// The breadth-first splitter stops once this many open subtrees exist. A
// fixed constant keeps the explored count independent of the worker count.
constexpr int kSplitTarget = 256;

struct CoreOutput {
    Incumbent total;
    long long explored = 0;
    bool aborted = false;
};

// Expands the search tree breadth-first into independent subtrees, solves
// them in parallel with subtree-local incumbents, and merges in frontier
// order. Each subtree starts from the same seed incumbent, so zeta, witness
// and explored are all pure functions of the instance.
CoreOutput solve_core(const Graph& g, const SolverLimits& limits,
                      bool collect) {
    check_order_guard(g.order(), limits);
    auto [chi, chi_witness] = detail::chi_with_witness(g, limits);
    const MaskGraph mg(g);
    const int n = mg.n;
    const long long eps = g.size();

    const bool has_deadline = limits.timeout_seconds >= 0;
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(
                has_deadline ? limits.timeout_seconds : 0));
    const ZetaDfs driver(mg, chi, eps, deadline, has_deadline);

    const Incumbent seed =
        detail::make_seed_incumbent(mg, chi, chi_witness, eps, collect);

    CoreOutput out;
    out.total = seed;

    std::deque<PartialState> queue;
    queue.emplace_back(n, chi);
    while (!queue.empty() && static_cast<int>(queue.size()) < kSplitTarget) {
        if (has_deadline && std::chrono::steady_clock::now() > deadline) {
            out.aborted = true;
            break;
        }
        PartialState s = std::move(queue.front());
        queue.pop_front();
        ++out.explored;
        if (s.assigned == n) {
            if (s.used == chi) {
                long long gain = driver.leaf_gain(s);
                if (gain >= out.total.best_gain)
                    out.total.offer(gain,
                                    detail::canonical_assignment(s.assign, chi));
            }
            continue;
        }
        long long bound = driver.bound_gain(s);
        if (bound == LLONG_MIN || bound < out.total.best_gain) continue;
        int v = detail::select_vertex(mg, s);
        int limit = std::min(s.used + 1, chi);
        for (int c = 0; c < limit; ++c) {
            if (mg.adj[v] & s.class_bits[c]) continue;
            PartialState child = s;
            child.place(v, c);
            queue.push_back(std::move(child));
        }
    }

    std::vector<PartialState> frontier(
        std::make_move_iterator(queue.begin()),
        std::make_move_iterator(queue.end()));
    std::vector<Incumbent> subtree_inc(frontier.size(), seed);
    // (filled by the loop below; seeded here for the aborted path)
    std::vector<SearchStats> subtree_stats(frontier.size());

    if (!out.aborted) {
        // Work on stack-local state and write back once per subtree; the
        // shared arrays would otherwise false-share between workers.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int i = 0; i < static_cast<int>(frontier.size()); ++i) {
            Incumbent inc = seed;
            SearchStats stats;
            driver.run(frontier[i], inc, stats);
            subtree_inc[i] = std::move(inc);
            subtree_stats[i] = stats;
        }
    }

    for (size_t i = 0; i < frontier.size(); ++i) {
        detail::merge_incumbent(out.total, subtree_inc[i]);
        out.explored += subtree_stats[i].explored;
        out.aborted = out.aborted || subtree_stats[i].aborted;
    }
    if (collect) {
        // Subtrees were seeded with the same heuristic witnesses, so the
        // merged list can repeat them.
        auto& optima = out.total.optima;
        std::sort(optima.begin(), optima.end());
        optima.erase(std::unique(optima.begin(), optima.end()), optima.end());
    }
    return out;
}

} // namespace

CompletionResult solve_zeta(const Graph& g, const SolverLimits& limits) {
    CoreOutput out = solve_core(g, limits, false);
    return detail::package_result(g, out.total, !out.aborted, out.explored);
}

std::vector<Coloring> all_optimal_witnesses(const Graph& g,
                                            const SolverLimits& limits) {
    CoreOutput out = solve_core(g, limits, true);
    std::vector<Coloring> witnesses;
    witnesses.reserve(out.total.optima.size());
    for (const auto& assignment : out.total.optima)
        witnesses.emplace_back(assignment);
    return witnesses;
}

} // namespace ccn
