#include <algorithm>

#include "ccn/completion.hpp"
#include "solver_internal.hpp"

namespace ccn::detail {

void ZetaDfs::run(PartialState& s, Incumbent& inc, SearchStats& stats) const {
    dfs(s, inc, stats);
}

long long ZetaDfs::leaf_gain(const PartialState& s) const {
    long long sq = 0;
    for (int c = 0; c < chi_; ++c)
        sq += static_cast<long long>(s.class_size[c]) * s.class_size[c];
    return (static_cast<long long>(g_.n) * g_.n - sq) / 2 - eps_;
}

long long ZetaDfs::bound_gain(const PartialState& s) const {
    long long minsq = min_final_square_sum(s, chi_, g_.n - s.assigned);
    if (minsq < 0) return LLONG_MIN;
    return (static_cast<long long>(g_.n) * g_.n - minsq) / 2 - eps_;
}

void ZetaDfs::dfs(PartialState& s, Incumbent& inc, SearchStats& stats) const {
    if (stats.aborted) return;
    if (has_deadline_ && (stats.explored & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
        stats.aborted = true;
        return;
    }
    ++stats.explored;
    if (s.assigned == g_.n) {
        if (s.used == chi_) {
            long long gain = leaf_gain(s);
            if (gain >= inc.best_gain)
                inc.offer(gain, canonical_assignment(s.assign, chi_));
        }
        return;
    }
    // Strict pruning keeps every branch that can still tie the incumbent, so
    // all optima are reached.
    long long bound = bound_gain(s);
    if (bound == LLONG_MIN || bound < inc.best_gain) return;
    int v = select_vertex(g_, s);
    int limit = std::min(s.used + 1, chi_);
    for (int c = 0; c < limit; ++c) {
        if (g_.adj[v] & s.class_bits[c]) continue;
        s.place(v, c);
        dfs(s, inc, stats);
        s.remove(v, c);
    }
}

Incumbent make_seed_incumbent(const MaskGraph& mg, int chi,
                              const std::vector<int>& chi_witness,
                              long long eps, bool collect) {
    Incumbent seed;
    seed.collect = collect;
    Coloring chi_col(chi_witness);
    seed.offer(completion_gain(chi_col.class_sizes(), eps),
               chi_col.assignment());
    std::vector<int> greedy = balanced_greedy_coloring(mg, chi);
    if (!greedy.empty()) {
        Coloring greedy_col(greedy);
        seed.offer(completion_gain(greedy_col.class_sizes(), eps),
                   greedy_col.assignment());
    }
    return seed;
}

void merge_incumbent(Incumbent& into, const Incumbent& from) {
    if (from.best_gain == LLONG_MIN) return;
    if (from.best_gain > into.best_gain) {
        into.best_gain = from.best_gain;
        into.best_assignment = from.best_assignment;
        if (into.collect) into.optima = from.optima;
    } else if (from.best_gain == into.best_gain) {
        if (from.best_assignment < into.best_assignment)
            into.best_assignment = from.best_assignment;
        if (into.collect)
            into.optima.insert(into.optima.end(), from.optima.begin(),
                               from.optima.end());
    }
}

CompletionResult package_result(const Graph& g, const Incumbent& inc,
                                bool exact, long long explored) {
    Coloring witness(inc.best_assignment);
    CompletionResult out{inc.best_gain, exact, witness, {}, 0, explored};
    out.pseudo_size = inc.best_gain + g.size();
    const auto& a = witness.assignment();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (a[u] != a[v] && !g.has_edge(u, v))
                out.completion_edges.emplace_back(u, v);
    return out;
}

} // namespace ccn::detail
