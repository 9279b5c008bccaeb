#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ccn/graph.hpp"
#include "ccn/limits.hpp"

namespace ccn {

/// Vertex colouring held in canonical restricted-growth form: colour 0 is
/// assigned to vertex 0 and each later vertex uses a colour at most one above
/// the largest colour seen so far. Every set partition of the vertices has
/// exactly one such labelling, so Colorings compare as partitions.
class Coloring {
public:
    /// Canonicalizes an arbitrary labelling (one non-negative label per
    /// vertex). Labels are renumbered by first occurrence; gaps disappear.
    explicit Coloring(const std::vector<int>& labels);

    const std::vector<int>& assignment() const { return assignment_; }
    int size() const { return static_cast<int>(assignment_.size()); }

    /// Number of colour classes (all are non-empty).
    int class_count() const { return class_count_; }

    /// theta: class sizes indexed by colour.
    std::vector<int> class_sizes() const;

    /// Vertex lists per colour class, each ascending.
    std::vector<std::vector<int>> classes() const;

    /// {"classes": [[...], ...]}
    std::string to_json() const;

    bool operator==(const Coloring& other) const {
        return assignment_ == other.assignment_;
    }
    bool operator<(const Coloring& other) const {
        return assignment_ < other.assignment_;
    }

private:
    std::vector<int> assignment_;
    int class_count_ = 0;
};

/// Edges of g whose endpoints share a colour, ascending lexicographic.
/// Empty exactly when col is proper on g.
std::vector<Edge> bad_edges(const Graph& g, const Coloring& col);

bool is_proper(const Graph& g, const Coloring& col);

/// Exact chromatic number: iterative deepening from a greedy clique lower
/// bound, DSATUR-ordered backtracking up to the greedy upper bound.
int chromatic_number(const Graph& g, const SolverLimits& limits = {});

/// Visits every partition of V(g) into exactly chi(g) non-empty independent
/// classes, once each, in ascending lexicographic order of the canonical
/// assignment. Return false from the visitor to stop early.
void for_each_chromatic_partition(
    const Graph& g, const std::function<bool(const Coloring&)>& visit,
    const SolverLimits& limits = {});

/// Materialized stream, same order.
std::vector<Coloring> chromatic_partitions(const Graph& g,
                                           const SolverLimits& limits = {});

} // namespace ccn
