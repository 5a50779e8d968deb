#include "wmi/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wmi {

bool RatMatrix::isZero() const {
    for (const Rational& v : a_)
        if (v != 0) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw std::logic_error("RatMatrix multiply: inner dimensions differ");
    RatMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational& l = lhs(i, k);
            if (l == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out(i, j) += l * rhs(k, j);
        }
    return out;
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;

    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
    for (std::size_t i = 0; i < R; ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < C; ++j) {
            const BigInt d = denominator(m(i, j));
            scale = lcm(scale, d);
        }
        for (std::size_t j = 0; j < C; ++j)
            a[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
    }

    // Bareiss: every division below is exact (entries stay minors of the
    // original integer matrix). Columns with no pivot are skipped.
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; r < R && c < C; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

long long ceil_rational(const Rational& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x); // always > 0
    BigInt q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return static_cast<long long>(q);
}

} // namespace wmi
