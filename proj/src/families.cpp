#include "ccn/families.hpp"

#include <stdexcept>
#include <string>

namespace ccn {

namespace {

void require_at_least(int n, int lo, const char* what) {
    if (n < lo)
        throw std::invalid_argument(std::string(what) + " needs n >= " +
                                    std::to_string(lo) + ", got " +
                                    std::to_string(n));
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::sunlet: return "sunlet";
    case Family::wheel: return "wheel";
    case Family::sun: return "sun";
    case Family::helm: return "helm";
    case Family::complete: return "complete";
    case Family::complete_multipartite: return "multipartite";
    case Family::nested_join: return "nested-join";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::cycle, Family::path, Family::sunlet,
                     Family::wheel, Family::sun, Family::helm,
                     Family::complete, Family::complete_multipartite,
                     Family::nested_join})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

Graph gen_cycle(int n) {
    require_at_least(n, 3, "cycle");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph gen_path(int n) {
    require_at_least(n, 1, "path");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph gen_complete(int n) {
    require_at_least(n, 1, "complete");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty())
        throw std::invalid_argument("multipartite needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    // Parts occupy consecutive vertex ranges.
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph gen_sunlet(int n) {
    require_at_least(n, 3, "sunlet");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i); // pendant
    }
    return Graph(2 * n, edges);
}

Graph gen_wheel(int n) {
    require_at_least(n, 3, "wheel");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n); // spoke to the hub
    }
    return Graph(n + 1, edges);
}

Graph gen_sun(int n) {
    require_at_least(n, 3, "sun");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(n + i, i);
        edges.emplace_back(n + i, (i + 1) % n);
    }
    return Graph(2 * n, edges);
}

Graph gen_helm(int n) {
    require_at_least(n, 3, "helm");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);         // spoke
        edges.emplace_back(i, n + 1 + i); // pendant
    }
    return Graph(2 * n + 1, edges);
}

Graph gen_nested_join(const Graph& base, int k) {
    if (k < 1) throw std::invalid_argument("nesting depth must be >= 1");
    std::vector<Edge> edges = base.edges();
    int n = base.order();
    for (int step = 0; step < k; ++step) {
        for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
        ++n;
    }
    return Graph(n, edges);
}

FamilyInstance make_instance(Family f, int n) {
    switch (f) {
    case Family::cycle: return {f, n, gen_cycle(n)};
    case Family::path: return {f, n, gen_path(n)};
    case Family::sunlet: return {f, n, gen_sunlet(n)};
    case Family::wheel: return {f, n, gen_wheel(n)};
    case Family::sun: return {f, n, gen_sun(n)};
    case Family::helm: return {f, n, gen_helm(n)};
    case Family::complete: return {f, n, gen_complete(n)};
    case Family::nested_join: return {f, n, gen_nested_join(gen_cycle(n), 1)};
    case Family::complete_multipartite:
        throw std::invalid_argument("multipartite takes a part list, not n");
    }
    throw std::invalid_argument("unknown family");
}

FormulaValue make_formula_value(Rational value) {
    return FormulaValue{value, is_integral(value)};
}

FormulaValue formula_zeta_cycle(int n) {
    require_at_least(n, 3, "cycle formula");
    const long long m = n;
    if (n % 2 == 0) return make_formula_value(make_rational(m * (m - 4), 4));
    switch (n % 3) {
    case 0:
        return make_formula_value(make_rational(m * (m - 3), 3));
    case 2:
        return make_formula_value(
            make_rational((m - 2) * (m - 5), 3) +
            make_rational(ceil_div(m - 2, 2) + 1));
    default: // n = 1 (mod 3)
        return make_formula_value(
            make_rational((m - 1) * (m - 4), 3) +
            make_rational(ceil_div(2 * (m - 5), 3) + 1));
    }
}

FormulaValue formula_zeta_sunlet(int n) {
    require_at_least(n, 3, "sunlet formula");
    return make_formula_value(formula_zeta_cycle(n).value *
                                  make_rational(3) +
                              make_rational(n));
}

FormulaValue formula_zeta_wheel(int n) {
    require_at_least(n, 3, "wheel formula");
    const long long m = n;
    if (n % 2 == 0) return make_formula_value(make_rational(m * m, 4));
    return formula_zeta_cycle(n);
}

FormulaValue formula_zeta_sun(int n) {
    require_at_least(n, 3, "sun formula");
    const long long m = n;
    return make_formula_value(make_rational(m * (3 * m - 4), 2));
}

FormulaValue formula_zeta_helm(int n) {
    require_at_least(n, 3, "helm formula");
    const long long m = n;
    if (n % 2 == 1) {
        if (n == 3) return make_formula_value(make_rational(9));
        return make_formula_value(make_rational(3 * m * (m - 1), 2));
    }
    switch (n % 6) {
    case 4:
        return make_formula_value(make_rational((4 * m - 1) * (m - 1), 3));
    case 0:
        return make_formula_value(make_rational(m * (12 * m - 19), 9));
    default: // n = 2 (mod 6)
        return make_formula_value(
            make_rational(12 * m * m - 27 * m - 4, 9));
    }
}

std::optional<FormulaValue> formula_zeta(Family f, int n) {
    switch (f) {
    case Family::cycle: return formula_zeta_cycle(n);
    case Family::sunlet: return formula_zeta_sunlet(n);
    case Family::wheel: return formula_zeta_wheel(n);
    case Family::sun: return formula_zeta_sun(n);
    case Family::helm: return formula_zeta_helm(n);
    default: return std::nullopt;
    }
}

bool formula_in_stated_domain(Family f, int n) {
    // The sunlet expression is stated for cycles with an odd rim; it is
    // still evaluated at even n, and reports annotate those rows.
    if (f == Family::sunlet) return n % 2 == 1;
    return true;
}

} // namespace ccn
