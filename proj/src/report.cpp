#include "ccn/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ccn/completion.hpp"

namespace ccn {

std::string row_status_name(RowStatus s) {
    switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::non_integral: return "non-integral";
    case RowStatus::formula_only: return "formula-only";
    case RowStatus::oracle_only: return "oracle-only";
    case RowStatus::skipped: return "skipped";
    }
    return "?";
}

bool family_supports_verify(Family f) {
    return f != Family::complete_multipartite;
}

int family_min_parameter(Family f) {
    switch (f) {
    case Family::path:
    case Family::complete:
        return 1;
    default:
        return 3;
    }
}

namespace {

RowStatus classify(const VerificationRow& row) {
    if (row.formula && !row.formula->integral) return RowStatus::non_integral;
    if (row.formula && row.oracle)
        return row.formula->value == make_rational(*row.oracle)
                   ? RowStatus::match
                   : RowStatus::mismatch;
    if (row.formula) return RowStatus::formula_only;
    if (row.oracle) return RowStatus::oracle_only;
    return RowStatus::skipped;
}

void validate_verify_args(Family f, int n) {
    if (!family_supports_verify(f))
        throw std::invalid_argument("family '" + family_name(f) +
                                    "' is not verifiable over an n range");
    if (n < family_min_parameter(f))
        throw std::invalid_argument("family '" + family_name(f) +
                                    "' needs n >= " +
                                    std::to_string(family_min_parameter(f)));
}

} // namespace

VerificationRow verify_instance(Family f, int n, const SolverLimits& limits) {
    validate_verify_args(f, n);
    VerificationRow row;
    row.family = f;
    row.n = n;
    row.formula = formula_zeta(f, n);
    row.outside_stated_domain = !formula_in_stated_domain(f, n);
    try {
        FamilyInstance inst = make_instance(f, n);
        CompletionResult res = solve_zeta(inst.graph, limits);
        if (res.exact) row.oracle = res.zeta;
    } catch (const GuardError&) {
        // oracle stays absent
    }
    row.status = classify(row);
    return row;
}

std::vector<VerificationRow> verify_range(Family f, int lo, int hi,
                                          const SolverLimits& limits) {
    if (lo > hi)
        throw std::invalid_argument("empty range: " + std::to_string(lo) +
                                    ".." + std::to_string(hi));
    validate_verify_args(f, lo);
    const int count = hi - lo + 1;
    std::vector<VerificationRow> rows(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int i = 0; i < count; ++i)
        rows[i] = verify_instance(f, lo + i, limits);
    return rows;
}

bool any_discrepancy(const std::vector<VerificationRow>& rows) {
    for (const auto& row : rows)
        if (row.status == RowStatus::mismatch ||
            row.status == RowStatus::non_integral)
            return true;
    return false;
}

void write_report_csv(std::ostream& out,
                      const std::vector<VerificationRow>& rows) {
    out << "family,n,formula,oracle,status\n";
    for (const auto& row : rows) {
        out << family_name(row.family) << ',' << row.n << ',';
        if (row.formula) out << to_string(row.formula->value);
        out << ',';
        if (row.oracle) out << *row.oracle;
        out << ',' << row_status_name(row.status) << '\n';
    }
}

std::string report_to_json(const std::vector<VerificationRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["family"] = family_name(row.family);
        obj["n"] = row.n;
        if (row.formula)
            obj["formula"] = to_string(row.formula->value);
        else
            obj["formula"] = nullptr;
        if (row.oracle)
            obj["oracle"] = *row.oracle;
        else
            obj["oracle"] = nullptr;
        obj["status"] = row_status_name(row.status);
        obj["outside_stated_domain"] = row.outside_stated_domain;
        arr.push_back(std::move(obj));
    }
    return arr.dump();
}

} // namespace ccn
