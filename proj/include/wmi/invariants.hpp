#ifndef WMI_INVARIANTS_HPP
#define WMI_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wmi/dual_complex.hpp"
#include "wmi/mhs.hpp"
#include "wmi/snc_config.hpp"

namespace wmi {

/*
 * Local invariants of an isolated hypersurface singularity x in ambient
 * dimension n, computed from the reduced exceptional fiber G of a
 * log-resolution that is an isomorphism outside x (the caller supplies G
 * as an SncConfiguration with dim = n - 2; nothing here computes
 * resolutions). The graded quotients between consecutive ideals in the
 * weight chain are skyscrapers at x for l >= 2, and
 *
 *     dim(C_l)_x = h^{0,n-l}( H^{n-2}(G) ),
 *
 * independent of the chosen resolution. The report covers l = 2..n; the
 * l = 0, 1 quotients are not skyscrapers and are excluded (the adjoint
 * colength in the weighted-homogeneous module carries the l = 1 content).
 */
struct CDimensionReport {
    int ambient_dim = 0;
    std::map<int, std::optional<long long>> dims; // l = 2..n; nullopt = unavailable
    std::optional<long long> total;               // set when every entry is available
    bool isolated_resolution_asserted = false;

    nlohmann::json toJson() const;
};

/// Requires ambient_dim >= 3 and cfg.dim_g == ambient_dim - 2.
/// (For curves in surfaces use curve_branch_c2: the degree-0 graded piece
/// of the fiber counts branches, not branches minus one.)
CDimensionReport c_dimensions(const SncConfiguration& cfg, int ambient_dim);

/// Curve singularity in a surface: dim C_2 = (number of points over x on
/// the normalization) - 1.
long long curve_branch_c2(long long branch_count);

/// Surface singularity in a threefold, closed forms: c2 = sum of the
/// genera of the exceptional curves, c3 = b_1 of the dual graph.
std::pair<long long, long long> surface_c_dims(const std::vector<long long>& genera,
                                               const DualComplex& dual_graph);

struct LcClassification {
    enum class Kind {
        RationalOrTrivial, // total = 0
        Type,              // log-canonical of type (0, hodge_q)
        TotalOnly,         // no log-canonicity assumed; only the total reported
    };
    Kind kind = Kind::TotalOnly;
    long long total = 0;
    int hodge_q = -1;

    std::string describe() const;
};

/// Under the log-canonical assumption a non-rational isolated singularity
/// has total 1 concentrated in a single l, giving type (0, n-l); totals
/// above 1 contradict the assumption and throw LcInconsistency.
LcClassification classify_lc_type(const CDimensionReport& report, bool assume_log_canonical);

/// Generic rank of C_l along an s-dimensional singular locus, from the
/// exceptional fiber of the transversal slice singularity
/// (slice.dim_g = n - 2 - s): h^{0,n-l-s}(H^{n-2-s}(G_slice)).
/// Zero when the weight n-l-s is negative. Requires l >= 2.
long long transversal_rank(const SncConfiguration& slice, int n, int s, int l);

} // namespace wmi

#endif
