#ifndef WMI_SNC_IDEAL_HPP
#define WMI_SNC_IDEAL_HPP

#include "wmi/monomial_ideal.hpp"

namespace wmi {

/*
 * Local models for a simple normal crossings divisor x_1 ... x_r = 0 in n
 * coordinates. The weight-l piece of the multiplier-ideal chain has an
 * explicit generating set: all squarefree monomials of degree r - l in the
 * first r variables; for l >= r it is the whole ring.
 */

/// Minimal generators of the weight-l ideal of the local SNC model.
/// Requires 0 <= r <= n and l >= 0.
MonomialIdeal local_wmi_generators(int r, int l, int n);

/// Ideal of the union of all j-fold intersections of the r components:
/// the intersection over all subsets J of {1..r} with |J| = j of the
/// coordinate ideals (x_i : i in J). Unit ideal when j > r.
MonomialIdeal strata_union_ideal(int r, int j, int n);

} // namespace wmi

#endif
