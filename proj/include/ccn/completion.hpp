#pragma once

#include <string>
#include <vector>

#include "ccn/coloring.hpp"
#include "ccn/graph.hpp"
#include "ccn/limits.hpp"

namespace ccn {

/// Result of an exact zeta computation.
struct CompletionResult {
    long long zeta = 0;
    bool exact = true;           // false when the deadline cut the search short
    Coloring witness;            // chromatic colouring attaining zeta (best found
                                 // when exact is false)
    std::vector<Edge> completion_edges; // E(H(witness)) \ E(g), ascending
    long long pseudo_size = 0;   // edge count of the witness pseudo completion graph
    long long explored = 0;      // search nodes expanded; worker-count independent
};

/// sum_{i<j} theta_i * theta_j - eps. Negative values are legal arithmetic.
long long completion_gain(const std::vector<int>& theta, long long eps);

/// Complete multipartite graph on the colour classes of col: edge {u,v} iff
/// the colours differ.
Graph pseudo_completion_graph(const Coloring& col);

/// Exact zeta by branch and bound over partitions into chi(g) independent
/// classes, maximizing the pairwise class-size product sum. Parallelized with
/// OpenMP over search subtrees; zeta, witness and explored do not depend on
/// the worker count. The witness is the lexicographically least canonical
/// colouring attaining the maximum.
CompletionResult solve_zeta(const Graph& g, const SolverLimits& limits = {});

/// Serial reference solver with the same contract (explored may differ from
/// the parallel kernel). Kept for testing and benchmarking.
CompletionResult solve_zeta_serial(const Graph& g,
                                   const SolverLimits& limits = {});

/// Every optimal witness, one canonical representative per partition,
/// ascending lexicographic. Meaningful only when the search ran to
/// completion (no timeout).
std::vector<Coloring> all_optimal_witnesses(const Graph& g,
                                            const SolverLimits& limits = {});

/// Naive oracle: maximum gain over the full chromatic-partition stream, no
/// pruning. Guard: order <= 10.
long long zeta_exhaustive(const Graph& g);

/// Edges of the pseudo completion graph that are missing from g, ascending.
/// col must be proper on g with exactly chi(g) classes.
std::vector<Edge> completion_edges(const Graph& g, const Coloring& col,
                                   const SolverLimits& limits = {});

/// g plus its completion edges; equals pseudo_completion_graph(col).
Graph completion_graph(const Graph& g, const Coloring& col,
                       const SolverLimits& limits = {});

/// Edge count of the complement; zeta never exceeds it, with equality
/// exactly for complete graphs.
long long completion_upper_bound(const Graph& g);

/// {"zeta": ..., "exact": ..., "classes": [[...]], "completion_edges":
///  [[u,v], ...], "explored": ...}
std::string to_json(const CompletionResult& result);

} // namespace ccn
