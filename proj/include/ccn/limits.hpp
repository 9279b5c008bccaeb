#pragma once

#include <stdexcept>

namespace ccn {

// Raised when an instance exceeds a size guard. The CLI maps this to exit
// code 3 unless --force is given.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solvers use 64-bit class masks; orders beyond this are rejected even with
// force set.
inline constexpr int kMaxSolverOrder = 64;

struct SolverLimits {
    int max_order = 24;            // default order guard for exact search
    bool force = false;            // bypass max_order (kMaxSolverOrder still applies)
    double timeout_seconds = -1.0; // < 0 disables the deadline
};

// Throws GuardError if n is outside what the limits allow.
void check_order_guard(int n, const SolverLimits& limits);

} // namespace ccn
