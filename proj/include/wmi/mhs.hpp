#ifndef WMI_MHS_HPP
#define WMI_MHS_HPP

#include <optional>
#include <vector>

#include "wmi/snc_config.hpp"

namespace wmi {

/*
 * The weight complex of a simple normal crossings variety, one Hodge piece
 * at a time. For a fixed q, position l holds the direct sum of the (0,q)
 * Hodge pieces over the level-(l+1) stratum components, and the
 * differential is the alternating sum of pullbacks
 *
 *     delta_r = sum_i (-1)^{i+1} lambda*_{i,r+1}
 *
 * where lambda_{i,r+1} includes an (r+1)-fold stratum into the r-fold
 * stratum obtained by dropping the i-th smallest component of its subset.
 * The weight-k part of H^{k+l}(G) is ker(delta at position l+1) modulo
 * im(delta at position l), and its (0,k) Hodge piece is computed by
 * running the same complex on the h^{0,k} data.
 *
 * q = 0 differentials are forced by incidence (H^0 of a connected stratum
 * is one-dimensional and pullback is the identity). For q >= 1 the matrices
 * must be supplied, except when no two consecutive positions are both
 * nonzero: every differential then has a zero domain or codomain and the
 * complex is forced. That shortcut is what makes top-degree pieces
 * computable from genus-type data alone.
 */

struct DeltaChain {
    int q = 0;
    std::vector<long long> term_dims;  // one per position 0..levels-1
    std::vector<RatMatrix> deltas;     // deltas[l]: position l -> l+1

    long long dim(int position) const {
        return (position >= 0 && position < static_cast<int>(term_dims.size()))
                   ? term_dims[position]
                   : 0;
    }
};

/// Full validation: structural invariants plus, for every q with supplied
/// pullbacks, block completeness and the complex condition delta o delta = 0.
ValidationReport validate_config(const SncConfiguration& cfg);

/// validate_config() and throw InvalidInput on any issue.
void require_valid_config(const SncConfiguration& cfg);

/// The (0,q) weight complex. Throws InsufficientHodgeData when q >= 1,
/// no pullbacks for q were supplied, and the forced-zero shortcut does
/// not apply.
DeltaChain delta_complex_q(const SncConfiguration& cfg, int q);

struct GradedPieceQuery {
    int weight = 0;       // k >= 0; also the Hodge index of the (0,k) piece
    int total_degree = 0; // t >= k; position in the complex is t - k
};

/// dim of the (0,weight) Hodge piece of Gr^W_weight H^{total_degree}(G).
long long graded_piece_dim(const SncConfiguration& cfg, const GradedPieceQuery& query);
long long graded_piece_dim(const SncConfiguration& cfg, int weight, int total_degree);

struct HodgeProfileEntry {
    int q = 0;
    std::optional<long long> dim; // nullopt when the data cannot determine it
};

/// h^{0,q}(H^t(G)) for q = 0..t; entries the configuration does not
/// determine are flagged unavailable, never guessed.
std::vector<HodgeProfileEntry> hodge_0q_profile(const SncConfiguration& cfg, int total_degree);

} // namespace wmi

#endif
