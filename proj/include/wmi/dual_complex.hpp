#ifndef WMI_DUAL_COMPLEX_HPP
#define WMI_DUAL_COMPLEX_HPP

#include <string>
#include <vector>

#include "wmi/snc_config.hpp"

namespace wmi {

/*
 * Dual complex of an SNC configuration: one k-cell per connected component
 * of each (k+1)-fold stratum, with signed face maps taken from incidence.
 * This is a Delta-complex, not a simplicial complex: parallel cells are
 * allowed (two components meeting in several points give parallel edges).
 * Homology is over the rationals.
 */
class DualComplex {
public:
    static DualComplex build(const SncConfiguration& cfg);

    /// Largest k with declared cells possible (dim of the source variety).
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }

    const std::vector<std::string>& cells(int k) const;

    /// Boundary map C_k -> C_{k-1} for k >= 1 (integer entries).
    const RatMatrix& boundary(int k) const;

    /// b_0..b_dimension, exact ranks via fraction-free elimination.
    std::vector<long long> bettiNumbers() const;

    /// Alternating sum of cell counts.
    long long eulerCharacteristic() const;

    /// 1-skeleton in DOT format (multigraph; parallel edges preserved).
    std::string toDot() const;

private:
    // cells_[k]: ids of k-cells; boundaries_[k]: C_{k+1} -> C_k.
    std::vector<std::vector<std::string>> cells_;
    std::vector<RatMatrix> boundaries_;
    std::vector<std::pair<std::string, std::string>> edge_endpoints_; // one per 1-cell
};

} // namespace wmi

#endif
