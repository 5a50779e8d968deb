#include "wmi/snc_ideal.hpp"

namespace wmi {

namespace {

// All size-k subsets of {0..r-1} as indicator exponent vectors of length n.
std::vector<ExponentVector> squarefree_subsets(int r, int k, int n) {
    std::vector<ExponentVector> out;
    std::vector<int> pick(k);
    // iterative combination enumeration
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        ExponentVector e(n, 0);
        for (int i : pick) e[i] = 1;
        out.push_back(std::move(e));
        int i = k - 1;
        while (i >= 0 && pick[i] == r - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

MonomialIdeal local_wmi_generators(int r, int l, int n) {
    if (n < 1) throw InvalidInput("need at least one variable");
    if (r < 0 || r > n) throw InvalidInput("component count r must satisfy 0 <= r <= n");
    if (l < 0) throw InvalidInput("weight l must be nonnegative");
    if (l >= r) return MonomialIdeal::unit(n);
    return MonomialIdeal::minimalize(n, squarefree_subsets(r, r - l, n));
}

MonomialIdeal strata_union_ideal(int r, int j, int n) {
    if (n < 1) throw InvalidInput("need at least one variable");
    if (r < 0 || r > n) throw InvalidInput("component count r must satisfy 0 <= r <= n");
    if (j < 1) throw InvalidInput("stratum depth j must be at least 1");
    MonomialIdeal result = MonomialIdeal::unit(n);
    if (j > r) return result; // no j-fold intersections exist
    for (const ExponentVector& indicator : squarefree_subsets(r, j, n)) {
        std::vector<ExponentVector> coord_gens;
        for (int i = 0; i < n; ++i)
            if (indicator[i] == 1) {
                ExponentVector e(n, 0);
                e[i] = 1;
                coord_gens.push_back(std::move(e));
            }
        result = result.intersect(MonomialIdeal::minimalize(n, std::move(coord_gens)));
    }
    return result;
}

} // namespace wmi
