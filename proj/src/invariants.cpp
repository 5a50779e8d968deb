#include "wmi/invariants.hpp"

#include <nlohmann/json.hpp>

namespace wmi {

nlohmann::json CDimensionReport::toJson() const {
    nlohmann::json j;
    j["ambient"] = ambient_dim;
    j["dims"] = nlohmann::json::object();
    for (const auto& [l, d] : dims)
        j["dims"][std::to_string(l)] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
    j["total"] = total ? nlohmann::json(*total) : nlohmann::json(nullptr);
    j["isolated_resolution_asserted"] = isolated_resolution_asserted;
    return j;
}

CDimensionReport c_dimensions(const SncConfiguration& cfg, int ambient_dim) {
    if (ambient_dim < 3)
        throw InvalidInput("ambient dimension must be at least 3 "
                           "(curve singularities use the branch-count formula)");
    if (cfg.dim_g != ambient_dim - 2)
        throw DimensionMismatch("configuration dim must be ambient - 2 (got dim " +
                                std::to_string(cfg.dim_g) + " for ambient " +
                                std::to_string(ambient_dim) + ")");
    require_valid_config(cfg);

    CDimensionReport report;
    report.ambient_dim = ambient_dim;
    report.isolated_resolution_asserted = cfg.isolated_resolution_assertion;
    long long sum = 0;
    bool complete = true;
    for (int l = 2; l <= ambient_dim; ++l) {
        std::optional<long long> d;
        try {
            d = graded_piece_dim(cfg, ambient_dim - l, ambient_dim - 2);
        } catch (const InsufficientHodgeData&) {
            complete = false;
        }
        if (d) sum += *d;
        report.dims[l] = d;
    }
    if (complete) report.total = sum;
    return report;
}

long long curve_branch_c2(long long branch_count) {
    if (branch_count < 1)
        throw InvalidInput("branch count must be at least 1");
    return branch_count - 1;
}

std::pair<long long, long long> surface_c_dims(const std::vector<long long>& genera,
                                               const DualComplex& dual_graph) {
    for (int k = 2; k <= dual_graph.dimension(); ++k)
        if (!dual_graph.cells(k).empty())
            throw InvalidInput("dual graph has cells of dimension > 1");
    long long c2 = 0;
    for (long long g : genera) {
        if (g < 0) throw InvalidInput("genus must be nonnegative");
        c2 += g;
    }
    const std::vector<long long> betti = dual_graph.bettiNumbers();
    const long long c3 = betti.size() > 1 ? betti[1] : 0;
    return {c2, c3};
}

std::string LcClassification::describe() const {
    switch (kind) {
        case Kind::RationalOrTrivial:
            return "rational-or-trivial";
        case Kind::Type:
            return "type (0, " + std::to_string(hodge_q) + ")";
        case Kind::TotalOnly:
            return "total = " + std::to_string(total);
    }
    return "";
}

LcClassification classify_lc_type(const CDimensionReport& report, bool assume_log_canonical) {
    long long total = 0;
    for (const auto& [l, d] : report.dims) {
        if (!d)
            throw InsufficientHodgeData("cannot classify: dim C_" + std::to_string(l) +
                                        " is unavailable");
        total += *d;
    }

    LcClassification cls;
    cls.total = total;
    if (total == 0) {
        cls.kind = LcClassification::Kind::RationalOrTrivial;
        return cls;
    }
    if (!assume_log_canonical) {
        cls.kind = LcClassification::Kind::TotalOnly;
        return cls;
    }
    if (total > 1)
        throw LcInconsistency("inconsistent with log-canonical: sum of C_l dimensions is " +
                              std::to_string(total) + ", but a log-canonical isolated "
                              "singularity has total at most 1");
    for (const auto& [l, d] : report.dims)
        if (*d == 1) {
            cls.kind = LcClassification::Kind::Type;
            cls.hodge_q = report.ambient_dim - l;
            break;
        }
    return cls;
}

long long transversal_rank(const SncConfiguration& slice, int n, int s, int l) {
    if (s < 1) throw InvalidInput("slice codimension must be at least 1");
    if (l < 2) throw InvalidInput("rank is defined for l >= 2");
    if (slice.dim_g != n - 2 - s)
        throw DimensionMismatch("slice configuration dim must be n - 2 - s");
    const int weight = n - l - s;
    if (weight < 0) return 0;
    return graded_piece_dim(slice, weight, n - 2 - s);
}

} // namespace wmi
