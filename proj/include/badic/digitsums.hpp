#pragma once

// Closed forms for the digit sums behind the corner coefficient, with
// brute-force enumeration counterparts used as oracles.

#include "badic/hammersley.hpp"
#include "badic/rational.hpp"

#include <cstdint>

namespace badic {

// x_n = sum over all digit tuples of sum_j b^-j t_j = (b^n - 1) / 2
inline Rational x_sum(int b, int n) {
    if (b < 2 || n < 1) throw std::invalid_argument("x_sum: need b >= 2, n >= 1");
    return Rational(pow_big(b, n) - 1) / 2;
}

// y_n = b^{n+1} x_n
inline Rational y_sum(int b, int n) {
    if (b < 2 || n < 1) throw std::invalid_argument("y_sum: need b >= 2, n >= 1");
    return Rational(pow_big(b, n + 1)) * x_sum(b, n);
}

// z_n = 1/4 b^{2n+1} + n/12 b^{n+2} - 1/2 b^{n+1} - n/12 b^n + 1/4 b
inline Rational z_sum(int b, int n) {
    if (b < 2 || n < 1) throw std::invalid_argument("z_sum: need b >= 2, n >= 1");
    Rational r = Rational(pow_big(b, 2 * n + 1)) / 4;
    r += Rational(n) * Rational(pow_big(b, n + 2)) / 12;
    r -= Rational(pow_big(b, n + 1)) / 2;
    r -= Rational(n) * Rational(pow_big(b, n)) / 12;
    r += Rational(b) / 4;
    return r;
}

// sum over tuples of sum_{i,j=1}^n b^{i-j} t_i s_j, closed form:
//   1/4 b^{2n+1} - 1/2 b^{n+1} + 1/4 b + (2a - n) (b^2 - 1)/12 b^n
inline Rational cross_sum(int b, int n, int a) {
    if (b < 2 || n < 1) throw std::invalid_argument("cross_sum: need b >= 2, n >= 1");
    if (a < 0 || a > n) throw std::invalid_argument("cross_sum: a outside 0..n");
    Rational r = Rational(pow_big(b, 2 * n + 1)) / 4;
    r -= Rational(pow_big(b, n + 1)) / 2;
    r += Rational(b) / 4;
    r += Rational(2 * a - n) * Rational(BigInt(b) * b - 1) / 12 * Rational(pow_big(b, n));
    return r;
}

// Full enumeration of the same double sum for a concrete pattern; the
// closed form may depend on the pattern only through a_n, and tests
// verify that rather than assume it.
inline Rational cross_sum_brute(int b, int n, const SignPattern& pattern) {
    if (pattern.size() != n) throw std::invalid_argument("cross_sum_brute: pattern length != n");
    const std::int64_t total = pow_i64(b, n);
    std::vector<int> t(n, 0);
    BigInt num = 0;  // the sum scaled by b^{n-1} so every term is integral
    for (std::int64_t rank = 0; rank < total; ++rank) {
        for (int i = 0; i < n; ++i) {
            if (t[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                const int sj = pattern.apply(j + 1, t[j], b);
                if (sj == 0) continue;
                // b^{i-j} t_i s_j with i, j one-based; scaled exponent is
                // (i - j) + (n - 1) in 0..2n-2
                num += BigInt(t[i]) * sj * pow_big(b, (i - j) + (n - 1));
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++t[i] < b) break;
            t[i] = 0;
        }
    }
    return make_rational(num, pow_big(b, n - 1));
}

// sum_z (1 - z1)(1 - z2) over the point set, by direct summation
inline Rational corner_sum(const PointSet& ps) {
    BigInt num = 0;  // over den^2
    for (std::int64_t i = 0; i < ps.size(); ++i)
        num += BigInt(ps.den - ps.xs[i]) * (ps.den - ps.ys[i]);
    return make_rational(num, BigInt(ps.den) * ps.den);
}

}  // namespace badic
