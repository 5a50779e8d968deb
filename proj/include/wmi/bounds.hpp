#ifndef WMI_BOUNDS_HPP
#define WMI_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wmi/errors.hpp"

namespace wmi {

// Numerical consequences for a degree-d hypersurface with isolated
// singularities in projective n-space. These are stated bounds, not
// sharpness claims.

/// Maximum number of isolated log-canonical singular points of the low
/// types (0,0)..(0,n-3): binom(d-1, n).
long long lc_special_point_bound(long long d, long long n);

/// Maximum number of non-rational singular points: binom(d, n).
long long nonrational_point_bound(long long d, long long n);

/// Smallest k such that degree-k forms surject onto the functions on the
/// scheme cut out by the weight-l ideal: d-n-1 for l >= 2, d-n for l = 1.
long long surjectivity_threshold(int l, long long d, long long n);

struct LowDegreeReport {
    enum class Case { DegreeEqualsDim, DegreeEqualsDimPlusOne, None };
    long long d = 0;
    long long n = 0;
    Case kind = Case::None;
    std::optional<long long> max_nonrational_points; // d = n case
    std::optional<long long> max_z2_length;          // d = n+1 case
    std::optional<int> forced_type_q;                // the q of type (0, q)
    std::vector<std::string> statements;

    nlohmann::json toJson() const;
};

LowDegreeReport low_degree_deductions(long long d, long long n);

struct SingularPoint {
    long long p_g = 0;
    std::optional<int> type_q; // declared log-canonical type (0, type_q)
};

struct BudgetVerdict {
    bool applicable = false; // only the d = n+1 regime is covered
    bool consistent = false;
    std::vector<std::string> violations;

    nlohmann::json toJson() const;
};

/// Consistency of a declared list of singular points against the genus
/// budget (sum of p_g at most n+1) and the forced-type constraints of the
/// d = n+1 regime. Other degrees report "not applicable" rather than
/// extrapolate.
BudgetVerdict budget_check(long long d, long long n, const std::vector<SingularPoint>& points);

} // namespace wmi

#endif
