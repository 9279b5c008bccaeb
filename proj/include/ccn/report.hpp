#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccn/families.hpp"
#include "ccn/limits.hpp"

namespace ccn {

enum class RowStatus {
    match,        // formula integral and equal to the oracle
    mismatch,     // both present, integral, unequal
    non_integral, // formula has denominator > 1
    formula_only, // oracle unavailable (guard or timeout)
    oracle_only,  // family has no closed form
    skipped,      // neither side available
};

std::string row_status_name(RowStatus s);

/// One family instance in a formula-versus-oracle report.
struct VerificationRow {
    Family family = Family::cycle;
    int n = 0;
    std::optional<FormulaValue> formula;
    std::optional<long long> oracle;
    RowStatus status = RowStatus::skipped;
    bool outside_stated_domain = false;
};

/// Evaluates the closed form and runs the exact solver for one instance.
/// Guard violations leave the oracle absent instead of throwing.
VerificationRow verify_instance(Family f, int n,
                                const SolverLimits& limits = {});

/// Rows for n in [lo, hi], instance-parallel, deterministic order.
std::vector<VerificationRow> verify_range(Family f, int lo, int hi,
                                          const SolverLimits& limits = {});

/// True when any row is a mismatch or non-integral (strict mode trips).
bool any_discrepancy(const std::vector<VerificationRow>& rows);

/// CSV with header "family,n,formula,oracle,status", LF endings. Formula
/// cells are exact: "21" or "15/2"; absent values are empty cells.
void write_report_csv(std::ostream& out,
                      const std::vector<VerificationRow>& rows);

/// JSON array of row objects.
std::string report_to_json(const std::vector<VerificationRow>& rows);

/// Families accepted by verify (integer parameter): everything except
/// multipartite.
bool family_supports_verify(Family f);

/// Least n for which the family generator is defined.
int family_min_parameter(Family f);

} // namespace ccn
