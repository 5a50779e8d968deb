#ifndef WMI_SAITO_HPP
#define WMI_SAITO_HPP

#include <string>
#include <vector>

#include "wmi/exact_linalg.hpp"
#include "wmi/monomial_ideal.hpp"

namespace wmi {

/*
 * Monomial formulas for the multiplier ideal and the adjoint ideal at an
 * isolated weighted-homogeneous hypersurface singularity with weights
 * w = (w_1,...,w_n):
 *
 *   I0(D)  = < x^e : <w, e + 1> >= 1 >
 *   adj(D) = < x^e : <w, e + 1> >  1 >
 *
 * All arithmetic is exact rational; the two ideals differ precisely at
 * equality, which floating point would destroy. The weights are taken as
 * given: nothing here checks that a polynomial realizes them, and the
 * formulas are only meaningful when w comes from an actual isolated
 * weighted-homogeneous singularity.
 */
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);

    /// Parses "1/3,1/3,1/3" (integers also accepted per entry).
    static WeightVector parse(const std::string& text);

    std::size_t size() const { return weights_.size(); }
    const std::vector<Rational>& weights() const { return weights_; }

    /// <w, e>
    Rational dot(const ExponentVector& e) const;

    /// <w, 1>
    Rational sum() const;

private:
    std::vector<Rational> weights_;
};

/// Minimal generators of { x^e : <w, e+1> >= 1 } (strict=false)
/// or { x^e : <w, e+1> > 1 } (strict=true).
MonomialIdeal weighted_ideal(const WeightVector& w, bool strict);

/// <w, 1> >= 1; equivalent to weighted_ideal(w, false) being the unit ideal.
bool is_log_canonical(const WeightVector& w);

struct WeightedChain {
    MonomialIdeal adj; // strict inequality
    MonomialIdeal i0;  // non-strict inequality; always contains adj
};

WeightedChain wh_chain(const WeightVector& w);

/// Colength of the adjoint ideal: the geometric genus of the singularity.
long long adjoint_colength(const WeightVector& w);

} // namespace wmi

#endif
