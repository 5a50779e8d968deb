#include "wmi/bounds.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "wmi/exact_linalg.hpp"

namespace wmi {

namespace {

long long binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    BigInt acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc *= a - b + i;
        acc /= i;
    }
    if (acc > std::numeric_limits<long long>::max())
        throw std::overflow_error("binomial coefficient overflows");
    return static_cast<long long>(acc);
}

void check_dn(long long d, long long n) {
    if (d < 1) throw InvalidInput("degree must be at least 1");
    if (n < 2) throw InvalidInput("projective dimension must be at least 2");
}

} // namespace

long long lc_special_point_bound(long long d, long long n) {
    check_dn(d, n);
    return binomial(d - 1, n);
}

long long nonrational_point_bound(long long d, long long n) {
    check_dn(d, n);
    return binomial(d, n);
}

long long surjectivity_threshold(int l, long long d, long long n) {
    if (l < 1) throw InvalidInput("weight index l must be at least 1");
    check_dn(d, n);
    return l >= 2 ? d - n - 1 : d - n;
}

nlohmann::json LowDegreeReport::toJson() const {
    nlohmann::json j;
    j["d"] = d;
    j["n"] = n;
    switch (kind) {
        case Case::DegreeEqualsDim: j["case"] = "d=n"; break;
        case Case::DegreeEqualsDimPlusOne: j["case"] = "d=n+1"; break;
        case Case::None: j["case"] = "none"; break;
    }
    if (max_nonrational_points) j["max_nonrational_points"] = *max_nonrational_points;
    if (max_z2_length) j["max_z2_length"] = *max_z2_length;
    if (forced_type_q) j["forced_type"] = "(0," + std::to_string(*forced_type_q) + ")";
    j["statements"] = statements;
    return j;
}

LowDegreeReport low_degree_deductions(long long d, long long n) {
    check_dn(d, n);
    LowDegreeReport r;
    r.d = d;
    r.n = n;
    if (d == n) {
        r.kind = LowDegreeReport::Case::DegreeEqualsDim;
        r.max_nonrational_points = 1;
        r.forced_type_q = static_cast<int>(n) - 2;
        r.statements.push_back("at most one non-rational singular point");
        r.statements.push_back("that point is log-canonical of type (0," +
                               std::to_string(n - 2) + ")");
    } else if (d == n + 1) {
        r.kind = LowDegreeReport::Case::DegreeEqualsDimPlusOne;
        r.max_z2_length = 1;
        r.forced_type_q = static_cast<int>(n) - 2;
        r.statements.push_back("the scheme of the weight-2 ideal has length at most 1");
        r.statements.push_back("all non-rational singular points, except possibly one, are "
                               "log-canonical of type (0," + std::to_string(n - 2) + ")");
    } else {
        r.kind = LowDegreeReport::Case::None;
        r.statements.push_back("no deduction at this degree");
    }
    return r;
}

nlohmann::json BudgetVerdict::toJson() const {
    nlohmann::json j;
    j["applicable"] = applicable;
    j["consistent"] = consistent;
    j["violations"] = violations;
    return j;
}

BudgetVerdict budget_check(long long d, long long n, const std::vector<SingularPoint>& points) {
    check_dn(d, n);
    BudgetVerdict verdict;
    if (d != n + 1) {
        verdict.violations.push_back("rule not applicable: requires degree = dim + 1");
        return verdict;
    }
    verdict.applicable = true;

    long long genus_sum = 0;
    int atypical = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SingularPoint& p = points[i];
        if (p.p_g < 0)
            verdict.violations.push_back("point " + std::to_string(i) + ": negative p_g");
        genus_sum += p.p_g;
        if (p.type_q) {
            if (*p.type_q < 0 || *p.type_q > n - 2)
                verdict.violations.push_back("point " + std::to_string(i) +
                                             ": type (0," + std::to_string(*p.type_q) +
                                             ") out of range");
            if (p.p_g != 1)
                verdict.violations.push_back("point " + std::to_string(i) +
                                             ": a log-canonical non-rational point has p_g = 1");
            if (*p.type_q != n - 2) ++atypical;
        }
    }
    if (genus_sum > n + 1)
        verdict.violations.push_back("sum of geometric genera " + std::to_string(genus_sum) +
                                     " exceeds the budget " + std::to_string(n + 1));
    if (atypical > 1)
        verdict.violations.push_back("more than one point of type other than (0," +
                                     std::to_string(n - 2) + ")");
    verdict.consistent = verdict.violations.empty();
    return verdict;
}

} // namespace wmi
