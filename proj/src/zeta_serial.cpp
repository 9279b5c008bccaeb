// Reference implementation of the zeta search: one depth-first pass with a
// global incumbent and no subtree splitting. The parallel kernel is checked
// against this in the test and benchmark targets.

#include <chrono>

#include "ccn/completion.hpp"
#include "solver_internal.hpp"

namespace ccn {

CompletionResult solve_zeta_serial(const Graph& g, const SolverLimits& limits) {
    check_order_guard(g.order(), limits);
    auto [chi, chi_witness] = detail::chi_with_witness(g, limits);
    const detail::MaskGraph mg(g);
    const long long eps = g.size();

    const bool has_deadline = limits.timeout_seconds >= 0;
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(
                has_deadline ? limits.timeout_seconds : 0));
    const detail::ZetaDfs driver(mg, chi, eps, deadline, has_deadline);

    detail::Incumbent inc =
        detail::make_seed_incumbent(mg, chi, chi_witness, eps, false);
    detail::SearchStats stats;
    detail::PartialState root(mg.n, chi);
    driver.run(root, inc, stats);
    return detail::package_result(g, inc, !stats.aborted, stats.explored);
}

} // namespace ccn
