#ifndef WMI_EXACT_LINALG_HPP
#define WMI_EXACT_LINALG_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wmi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/*
 * Dense matrix over the rationals, row-major.
 *
 * Rank is computed exactly: each row is scaled to integers and the integer
 * matrix is reduced by fraction-free (Bareiss) elimination, so there is no
 * rounding anywhere. The matrices in this project are small boundary and
 * pullback matrices; cost is irrelevant next to exactness.
 */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool isZero() const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);

/// Exact rank via fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Smallest integer >= x (x any exact rational).
long long ceil_rational(const Rational& x);

} // namespace wmi

#endif
