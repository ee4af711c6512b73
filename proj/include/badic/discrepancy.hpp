#pragma once

// The discrepancy function D_P(x) = (1/N) #{z : z < x strictly} - x1*x2
// with the open-box counting convention C_z = (z1,1) x (z2,1), and its
// exact L2 norm through the expanded (Warnock style) double sum.

#include "badic/hammersley.hpp"
#include "badic/rational.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace badic {

struct EvalPoint {
    Rational x;
    Rational y;
};

namespace detail {

// k/den < r, exact; fast path when r fits in 64-bit words
inline bool frac_less(std::int64_t k, std::int64_t den, const Rational& r) {
    const BigInt& rn = numerator(r);
    const BigInt& rd = denominator(r);
    if (rn >= std::numeric_limits<std::int64_t>::min() && rn <= std::numeric_limits<std::int64_t>::max() &&
        rd <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<__int128>(k) * rd.convert_to<std::int64_t>() <
               static_cast<__int128>(rn.convert_to<std::int64_t>()) * den;
    }
    return BigInt(k) * rd < rn * BigInt(den);
}

}  // namespace detail

// #{z in ps : z_x < p.x and z_y < p.y}, both inequalities strict
inline std::int64_t count_open_box(const PointSet& ps, const EvalPoint& p) {
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < ps.size(); ++i)
        if (detail::frac_less(ps.xs[i], ps.den, p.x) && detail::frac_less(ps.ys[i], ps.den, p.y))
            ++count;
    return count;
}

inline Rational eval_discrepancy(const PointSet& ps, const EvalPoint& p) {
    return Rational(count_open_box(ps, p)) / Rational(ps.den) - p.x * p.y;
}

// Exact integral of D_P^2 over the unit square for an arbitrary list of
// rational points with common denominator den:
//   (1/N^2) sum_{z,z'} (1-max(zx,zx'))(1-max(zy,zy'))
//   - (2/N) sum_z (1-zx^2)(1-zy^2)/4 + 1/9
inline Rational l2_squared_exact(const std::vector<std::int64_t>& xs,
                                 const std::vector<std::int64_t>& ys,
                                 std::int64_t den) {
    const std::int64_t N = static_cast<std::int64_t>(xs.size());
    if (N == 0) throw std::invalid_argument("l2_squared_exact: empty point set");

    // pair sum, integer numerators over den^2; rows spill into a BigInt
    BigInt pair_sum = 0;
    const bool small = den <= (std::int64_t(1) << 20);
    for (std::int64_t i = 0; i < N; ++i) {
        const std::int64_t xi = den - xs[i], yi = den - ys[i];
        if (small) {
            std::int64_t row = xi * yi;  // diagonal term
            for (std::int64_t j = i + 1; j < N; ++j) {
                const std::int64_t mx = den - std::max(xs[i], xs[j]);
                const std::int64_t my = den - std::max(ys[i], ys[j]);
                row += 2 * mx * my;
            }
            pair_sum += row;
        } else {
            BigInt row = BigInt(xi) * yi;
            for (std::int64_t j = i + 1; j < N; ++j) {
                const std::int64_t mx = den - std::max(xs[i], xs[j]);
                const std::int64_t my = den - std::max(ys[i], ys[j]);
                row += 2 * BigInt(mx) * my;
            }
            pair_sum += row;
        }
    }

    // cross sum, numerators over den^4
    const BigInt den2 = BigInt(den) * den;
    BigInt cross_sum = 0;
    for (std::int64_t i = 0; i < N; ++i)
        cross_sum += (den2 - BigInt(xs[i]) * xs[i]) * (den2 - BigInt(ys[i]) * ys[i]);

    Rational r = make_rational(pair_sum, BigInt(N) * N * den2);
    r -= make_rational(cross_sum, BigInt(2) * N * den2 * den2);
    r += Rational(1, 9);
    return r;
}

inline Rational l2_squared_exact(const PointSet& ps) {
    return l2_squared_exact(ps.xs, ps.ys, ps.den);
}

}  // namespace badic
