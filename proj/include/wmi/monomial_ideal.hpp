#ifndef WMI_MONOMIAL_IDEAL_HPP
#define WMI_MONOMIAL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wmi/errors.hpp"

namespace wmi {

/// Exponent tuple of a monomial; length is the ambient variable count.
using ExponentVector = std::vector<int>;

/// True iff a <= b componentwise (a divides x^b as a monomial).
bool divides(const ExponentVector& a, const ExponentVector& b);

/*
 * A monomial ideal in n variables, stored as its unique minimal generating
 * set (an antichain under componentwise <=), sorted lexicographically.
 *
 * Canonical forms: the unit ideal is { (0,...,0) }, the zero ideal is the
 * empty generator set.
 */
class MonomialIdeal {
public:
    /// Builds the ideal generated by `gens`: validates entries, drops
    /// dominated generators, sorts. The generated ideal is unchanged.
    static MonomialIdeal minimalize(int ambient_dim, std::vector<ExponentVector> gens);

    static MonomialIdeal unit(int ambient_dim);
    static MonomialIdeal zero(int ambient_dim);

    int ambientDim() const { return ambient_dim_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }

    bool isUnit() const;
    bool isZero() const { return gens_.empty(); }

    /// Membership: true iff some generator divides x^e.
    bool contains(const ExponentVector& e) const;

    /// Ideal containment: true iff every generator of `other` lies in *this.
    bool contains(const MonomialIdeal& other) const;

    MonomialIdeal intersect(const MonomialIdeal& other) const;

    /// Number of monomials outside the ideal; nullopt when infinite
    /// (i.e. when some variable has no pure power in the ideal).
    std::optional<long long> colength() const;

    bool operator==(const MonomialIdeal&) const = default;

    /// Text form "(x1 x2, x2^3)"; unit renders as "(1)", zero as "(0)".
    std::string render() const;

    nlohmann::json toJson() const;
    static MonomialIdeal fromJson(const nlohmann::json& j);

private:
    MonomialIdeal(int ambient_dim, std::vector<ExponentVector> minimal_sorted)
        : ambient_dim_(ambient_dim), gens_(std::move(minimal_sorted)) {}

    int ambient_dim_ = 0;
    std::vector<ExponentVector> gens_;
};

} // namespace wmi

#endif
