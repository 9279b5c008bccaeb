#include "ccn/limits.hpp"

#include <string>

namespace ccn {

void check_order_guard(int n, const SolverLimits& limits) {
    if (n > kMaxSolverOrder)
        throw GuardError("order " + std::to_string(n) +
                         " exceeds the solver cap of " +
                         std::to_string(kMaxSolverOrder));
    if (!limits.force && n > limits.max_order)
        throw GuardError("order " + std::to_string(n) +
                         " exceeds the guard of " +
                         std::to_string(limits.max_order) +
                         "; pass force to override");
}

} // namespace ccn
