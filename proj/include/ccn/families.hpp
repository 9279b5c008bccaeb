#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccn/graph.hpp"
#include "ccn/rational.hpp"

namespace ccn {

enum class Family {
    cycle,
    path,
    sunlet,
    wheel,
    sun,
    helm,
    complete,
    complete_multipartite,
    nested_join,
};

/// CLI surface name: cycle, path, sunlet, wheel, sun, helm, complete,
/// multipartite, nested-join.
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

Graph gen_cycle(int n);  // n >= 3, vertices 0..n-1 in cyclic order
Graph gen_path(int n);   // n >= 1
Graph gen_complete(int n); // n >= 1
Graph gen_complete_multipartite(const std::vector<int>& parts);

/// Cycle 0..n-1 with pendant n+i attached to cycle vertex i. n >= 3.
Graph gen_sunlet(int n);

/// Rim cycle 0..n-1 plus hub n adjacent to every rim vertex. n >= 3.
Graph gen_wheel(int n);

/// K_n core 0..n-1 with outer vertex n+i adjacent to i and (i+1) mod n.
/// n >= 3.
Graph gen_sun(int n);

/// Wheel (rim 0..n-1, hub n) with pendant n+1+i attached to rim vertex i.
/// n >= 3.
Graph gen_helm(int n);

/// Adds a new vertex adjacent to all existing ones, k times. k >= 1.
Graph gen_nested_join(const Graph& base, int k);

struct FamilyInstance {
    Family family;
    int n;
    Graph graph;
};

/// Instance of an integer-parameter family (everything except multipartite;
/// nested_join means one cone over the n-cycle).
FamilyInstance make_instance(Family f, int n);

/// Exact rational produced by a closed-form zeta expression. Non-integral
/// values are reported, never rounded and never an error.
struct FormulaValue {
    Rational value;
    bool integral = false;
};

FormulaValue make_formula_value(Rational value);

// Closed-form zeta evaluators for the graph families above. Pure arithmetic
// on n; they never look at a graph.
FormulaValue formula_zeta_cycle(int n);  // n >= 3
FormulaValue formula_zeta_sunlet(int n); // n >= 3
FormulaValue formula_zeta_wheel(int n);  // n >= 3
FormulaValue formula_zeta_sun(int n);    // n >= 3
FormulaValue formula_zeta_helm(int n);   // n >= 3

/// Dispatch by family; std::nullopt for families without a closed form.
std::optional<FormulaValue> formula_zeta(Family f, int n);

/// False where a closed form is evaluated beyond its stated premises
/// (currently the sunlet expression at even n). Reports annotate such rows.
bool formula_in_stated_domain(Family f, int n);

} // namespace ccn
