#pragma once

// The 2-D b-adic Haar system on the unit square and the Haar
// coefficients of the discrepancy function of generalized Hammersley
// point sets: closed forms for the volume function x1*x2 and the
// indicator of an open box, the regime-dispatched fast evaluation, and
// a geometric integration oracle that is independent of the closed
// forms.

#include "badic/cyclotomic.hpp"
#include "badic/discrepancy.hpp"
#include "badic/hammersley.hpp"
#include "badic/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace badic {

// One 2-D Haar index. Level -1 on an axis means the indicator factor
// (D_{-1} = {0}, B_{-1} = {1}); level j >= 0 means position m in
// 0..b^j-1 and frequency l in 1..b-1.
struct HaarIndex {
    int j1 = -1;
    int j2 = -1;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    int l1 = 1;
    int l2 = 1;
};

inline void validate_index(int b, const HaarIndex& idx) {
    auto check_axis = [b](int j, std::int64_t m, int l) {
        if (j < -1) throw std::invalid_argument("HaarIndex: level < -1");
        if (j == -1) {
            if (m != 0 || l != 1)
                throw std::invalid_argument("HaarIndex: level -1 requires m = 0, l = 1");
        } else {
            if (m < 0 || m >= pow_i64(b, j))
                throw std::invalid_argument("HaarIndex: m out of range");
            if (l < 1 || l >= b)
                throw std::invalid_argument("HaarIndex: l out of range");
        }
    };
    check_axis(idx.j1, idx.m1, idx.l1);
    check_axis(idx.j2, idx.m2, idx.l2);
}

// The eight magnitude regimes of the coefficient analysis, keyed by how
// (j1, j2) compares with n and -1.
enum class Regime { Coarse, Critical, FineBoth, RowBoundary, ColBoundary, RowFine, ColFine, Corner };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Coarse: return "Coarse";
        case Regime::Critical: return "Critical";
        case Regime::FineBoth: return "FineBoth";
        case Regime::RowBoundary: return "RowBoundary";
        case Regime::ColBoundary: return "ColBoundary";
        case Regime::RowFine: return "RowFine";
        case Regime::ColFine: return "ColFine";
        case Regime::Corner: return "Corner";
    }
    return "?";
}

inline Regime classify_level(int j1, int j2, int n) {
    if (j1 >= 0 && j2 >= 0) {
        if (j1 >= n || j2 >= n) return Regime::FineBoth;
        if (j1 + j2 < n - 1) return Regime::Coarse;
        return Regime::Critical;
    }
    if (j2 == -1 && j1 >= 0) return j1 < n ? Regime::RowBoundary : Regime::RowFine;
    if (j1 == -1 && j2 >= 0) return j2 < n ? Regime::ColBoundary : Regime::ColFine;
    return Regime::Corner;
}

inline Regime classify_regime(const HaarIndex& idx, int n) {
    return classify_level(idx.j1, idx.j2, n);
}

// +1 when s_i is the identity map, -1 when it is the reversal; the sign
// of sum_k s_i(k) zeta^{lk} = +- b / (zeta^l - 1).
inline int flip_sign(const SignPattern& pattern, int i) {
    if (i < 1 || i > pattern.size())
        throw std::out_of_range("flip_sign: index outside 1..n");
    return pattern.maps[i - 1] == DigitMap::Identity ? 1 : -1;
}

// sum_{k=1}^{b-1} k zeta^{lk}; satisfies result * (zeta^l - 1) = b.
inline CycloValue geom_sum(int b, int l) {
    if (l < 1 || l >= b) throw std::invalid_argument("geom_sum: l out of range");
    CycloValue s(b);
    for (int k = 1; k < b; ++k) s += Rational(k) * zeta_pow(b, static_cast<long long>(l) * k);
    return s;
}

// sum_{r=k+1}^{b-1} zeta^{lr}; empty for k = b-1.
inline CycloValue tail_sum(int b, int l, int k) {
    if (l < 1 || l >= b) throw std::invalid_argument("tail_sum: l out of range");
    if (k < 0 || k > b - 1) throw std::invalid_argument("tail_sum: k out of range");
    CycloValue s(b);
    for (int r = k + 1; r < b; ++r) s += zeta_pow(b, static_cast<long long>(l) * r);
    return s;
}

// Haar function value at a point: product over axes of zeta^{l k} where
// k is the child interval containing the coordinate, 0 outside the
// supporting box, and 1 on [0,1) for a level -1 axis.
inline CycloValue haar_value(int b, const HaarIndex& idx, const EvalPoint& p) {
    validate_index(b, idx);
    long long exponent = 0;
    auto axis = [&](int j, std::int64_t m, int l, const Rational& x) -> bool {
        if (j == -1) return x >= 0 && x < 1;
        // child index floor(x b^{j+1}) - b m, valid only inside the box
        Rational scaled = x * pow_rational(b, j + 1);
        BigInt cell = numerator(scaled) / denominator(scaled);
        BigInt rel = cell - BigInt(m) * b;
        if (rel < 0 || rel >= b) return false;
        exponent += static_cast<long long>(l) * rel.convert_to<long long>();
        return true;
    };
    if (!axis(idx.j1, idx.m1, idx.l1, p.x) || !axis(idx.j2, idx.m2, idx.l2, p.y))
        return CycloValue::zero(b);
    return zeta_pow(b, exponent);
}

// Haar coefficient of the volume function f(x) = x1 x2.
inline CycloValue coeff_volume(int b, const HaarIndex& idx) {
    validate_index(b, idx);
    auto axis_factor = [b](int j, int l) -> CycloValue {
        if (j == -1) return CycloValue(b, Rational(1, 2));
        return pow_rational(b, -2 * j - 1) * inv_zeta_m1(b, l);
    };
    return axis_factor(idx.j1, idx.l1) * axis_factor(idx.j2, idx.l2);
}

namespace detail {

// interiority of k/b^n in (m b^-j, (m+1) b^-j); only possible for j < n
inline bool interior_in_axis(std::int64_t k, int n, int b, int j, std::int64_t m) {
    if (j >= n) return false;
    const std::int64_t w = pow_i64(b, n - j);
    return k > m * w && k < (m + 1) * w;
}

// Precomputed zeta powers and tail sums; these sit in the innermost
// loops of the level sweeps.
struct HotTables {
    std::vector<CycloValue> zeta;               // zeta^e, e in [0, b)
    std::vector<std::vector<CycloValue>> tail;  // tail[l][k] = sum_{r>k} zeta^{lr}
};

inline const HotTables& hot_tables(int b) {
    static std::map<int, HotTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it == cache.end()) {
        HotTables t;
        t.zeta.reserve(b);
        for (int e = 0; e < b; ++e) t.zeta.push_back(zeta_pow(b, e));
        t.tail.resize(b);
        for (int l = 1; l < b; ++l) {
            t.tail[l].reserve(b);
            for (int k = 0; k < b; ++k) t.tail[l].push_back(tail_sum(b, l, k));
        }
        it = cache.emplace(b, std::move(t)).first;
    }
    return it->second;
}

// Lemma-4.3 style axis bracket for an interior coordinate k/b^n:
//   (b m + kc + 1 - b^{j+1} z) zeta^{l kc} + sum_{r>kc} zeta^{lr}
// wc is the child width b^{n-j-1} in units of b^-n.
inline CycloValue axis_bracket(const HotTables& ht, int b, std::int64_t wc, std::int64_t m, int l,
                               std::int64_t k) {
    const std::int64_t kc = k / wc - m * b;
    Rational scalar((b * m + kc + 1) * wc - k, wc);
    CycloValue br = scalar * ht.zeta[static_cast<std::size_t>((l * kc) % b)];
    br += ht.tail[l][static_cast<std::size_t>(kc)];
    return br;
}

}  // namespace detail

// Haar coefficient of the indicator of C_z = (z1,1) x (z2,1): zero
// unless z is interior to the box on every level >= 0 axis, otherwise
// the bracket-product closed form.
inline CycloValue coeff_indicator(int b, const HaarIndex& idx, const EvalPoint& z) {
    validate_index(b, idx);
    auto axis_factor = [&](int j, std::int64_t m, int l, const Rational& zi, CycloValue& out) -> bool {
        if (j == -1) {
            out = CycloValue(b, Rational(1) - zi);
            return true;
        }
        Rational lo = Rational(m) * pow_rational(b, -j);
        Rational hi = Rational(m + 1) * pow_rational(b, -j);
        if (!(zi > lo && zi < hi)) return false;  // interior test, exact
        Rational scaled = zi * pow_rational(b, j + 1);
        BigInt cell = numerator(scaled) / denominator(scaled);
        const int kc = (cell - BigInt(m) * b).convert_to<int>();
        Rational scalar = Rational(b * m + kc + 1) - scaled;
        CycloValue br = scalar * zeta_pow(b, static_cast<long long>(l) * kc);
        br += tail_sum(b, l, kc);
        out = pow_rational(b, -j - 1) * br;
        return true;
    };
    CycloValue fx(b), fy(b);
    if (!axis_factor(idx.j1, idx.m1, idx.l1, z.x, fx) || !axis_factor(idx.j2, idx.m2, idx.l2, z.y, fy))
        return CycloValue::zero(b);
    return fx * fy;
}

namespace detail {

// (1/N) sum over the given points of the Lemma-4.3 products; candidates
// outside the box interior contribute nothing. Point indices refer to
// ps. The volume coefficient is not subtracted here.
template <class It>
CycloValue pointwise_sum(const PointSet& ps, const HaarIndex& idx, It first, It last) {
    const int b = ps.b, n = ps.n;
    CycloValue acc(b);
    // no point is interior once an axis reaches level n
    if ((idx.j1 >= 0 && idx.j1 >= n) || (idx.j2 >= 0 && idx.j2 >= n)) return acc;

    const auto& ht = hot_tables(b);
    const bool ax1 = idx.j1 >= 0, ax2 = idx.j2 >= 0;
    const std::int64_t w1 = ax1 ? pow_i64(b, n - idx.j1) : 0;
    const std::int64_t w2 = ax2 ? pow_i64(b, n - idx.j2) : 0;
    const std::int64_t wc1 = ax1 ? w1 / b : 0;
    const std::int64_t wc2 = ax2 ? w2 / b : 0;

    for (It it = first; it != last; ++it) {
        const std::int64_t i = *it;
        const std::int64_t kx = ps.xs[i], ky = ps.ys[i];
        if (ax1 && !(kx > idx.m1 * w1 && kx < (idx.m1 + 1) * w1)) continue;
        if (ax2 && !(ky > idx.m2 * w2 && ky < (idx.m2 + 1) * w2)) continue;
        if (ax1 && ax2) {
            acc += axis_bracket(ht, b, wc1, idx.m1, idx.l1, kx) *
                   axis_bracket(ht, b, wc2, idx.m2, idx.l2, ky);
        } else if (ax1) {
            acc += Rational(ps.den - ky, ps.den) * axis_bracket(ht, b, wc1, idx.m1, idx.l1, kx);
        } else if (ax2) {
            acc += Rational(ps.den - kx, ps.den) * axis_bracket(ht, b, wc2, idx.m2, idx.l2, ky);
        } else {
            acc += CycloValue(b, Rational(BigInt(ps.den - kx) * (ps.den - ky), BigInt(ps.den) * ps.den));
        }
    }
    // the per-axis prefactors b^{-j-1} factor out of the sum
    Rational scale(1, ps.den);
    if (ax1) scale *= pow_rational(b, -idx.j1 - 1);
    if (ax2) scale *= pow_rational(b, -idx.j2 - 1);
    acc *= scale;
    return acc;
}

template <class It>
CycloValue pointwise_over(const PointSet& ps, const HaarIndex& idx, It first, It last) {
    return pointwise_sum(ps, idx, first, last) - coeff_volume(ps.b, idx);
}

struct AllPoints {
    std::int64_t i = 0;
    std::int64_t operator*() const { return i; }
    AllPoints& operator++() { ++i; return *this; }
    bool operator!=(const AllPoints& o) const { return i != o.i; }
};

}  // namespace detail

// Haar coefficient of D_P by linearity: (1/N) sum_z mu(1_{C_z}) minus
// the volume coefficient.
inline CycloValue coeff_discrepancy_pointwise(const PointSet& ps, const HaarIndex& idx) {
    validate_index(ps.b, idx);
    return detail::pointwise_over(ps, idx, detail::AllPoints{0}, detail::AllPoints{ps.size()});
}

namespace detail {

// epsilon of the boundary-level closed form: the part of the y
// expansion fixed by the box digits, sum_{i=n-j1+1}^{n} b^{-i} s_i(t_i),
// returned as numerator over b^n. The digits t_{n-v+1} are read off m1,
// most significant first.
inline std::int64_t boundary_eps_num_row(const PointSet& ps, int j1, std::int64_t m1) {
    const int b = ps.b, n = ps.n;
    std::int64_t num = 0;
    std::int64_t m = m1;
    for (int v = j1; v >= 1; --v) {
        const int digit = static_cast<int>(m % b);  // t_{n-v+1}
        m /= b;
        const int i = n - v + 1;
        num += static_cast<std::int64_t>(ps.pattern.apply(i, digit, b)) * pow_i64(b, v - 1);
    }
    return num;
}

// the x-axis counterpart for j = (-1, j2): eps' = sum_{i=1}^{j2} b^{i-n-1} t_i,
// where the digits of m2 give s_1..s_{j2} and t_i = s_i^{-1}(digit)
inline std::int64_t boundary_eps_num_col(const PointSet& ps, int j2, std::int64_t m2) {
    const int b = ps.b, n = ps.n;
    std::int64_t num = 0;
    std::int64_t m = m2;
    for (int i = j2; i >= 1; --i) {
        const int sdigit = static_cast<int>(m % b);  // s_i
        m /= b;
        num += static_cast<std::int64_t>(ps.pattern.apply(i, sdigit, b)) * pow_i64(b, i - 1);
    }
    return num;
}

// Exact boundary-level coefficient from the fast closed form:
//   b^{-n-j-1} (w - eps b^{n-j} (zeta^l - 1)) / (zeta^l - 1)^2
//   -+ b^{-2n} / (2 (zeta^l - 1))
// with w = zeta^l and sign - when the child-digit map is the identity,
// w = -1 and sign + when it is the reversal.
inline CycloValue boundary_fast(int b, int n, int j, int l, bool child_map_identity,
                                const Rational& eps) {
    const CycloValue& inv = inv_zeta_m1(b, l);
    CycloValue w = child_map_identity ? zeta_pow(b, l) : CycloValue(b, Rational(-1));
    CycloValue zm1 = zeta_pow(b, l) - CycloValue::one(b);
    CycloValue core = w - (eps * pow_rational(b, n - j)) * zm1;
    CycloValue value = pow_rational(b, -n - j - 1) * (core * (inv * inv));
    Rational half_b2n = pow_rational(b, -2 * n) / 2;
    if (child_map_identity)
        value -= half_b2n * inv;
    else
        value += half_b2n * inv;
    return value;
}

}  // namespace detail

// Corner coefficient, Prop.-4.9 closed form.
inline CycloValue corner_coeff(const PointSet& ps) {
    const int b = ps.b, n = ps.n;
    const int a = a_count(ps.pattern);
    Rational v = pow_rational(b, -2 * n) / 4 + pow_rational(b, -n) / 2 +
                 Rational(2 * a - n) * Rational(static_cast<std::int64_t>(b) * b - 1, 12) *
                     pow_rational(b, -n - 1);
    return CycloValue(b, v);
}

// Regime-dispatched coefficient: closed forms everywhere except the
// critical band, which holds at most b interior points per box and
// falls back to the pointwise sum.
inline CycloValue coeff_discrepancy_fast(const PointSet& ps, const HaarIndex& idx) {
    validate_index(ps.b, idx);
    const int b = ps.b, n = ps.n;
    switch (classify_regime(idx, n)) {
        case Regime::Corner:
            return corner_coeff(ps);
        case Regime::Coarse: {
            const int sigma = flip_sign(ps.pattern, n - idx.j1) * flip_sign(ps.pattern, idx.j2 + 1);
            return (Rational(sigma) * pow_rational(b, -2 * n)) *
                   (inv_zeta_m1(b, idx.l1) * inv_zeta_m1(b, idx.l2));
        }
        case Regime::FineBoth:
        case Regime::RowFine:
        case Regime::ColFine:
            return -coeff_volume(b, idx);
        case Regime::RowBoundary: {
            const bool ident = ps.pattern.maps[n - idx.j1 - 1] == DigitMap::Identity;  // s_{n-j1}
            Rational eps = Rational(detail::boundary_eps_num_row(ps, idx.j1, idx.m1)) / Rational(ps.den);
            return detail::boundary_fast(b, n, idx.j1, idx.l1, ident, eps);
        }
        case Regime::ColBoundary: {
            const bool ident = ps.pattern.maps[idx.j2] == DigitMap::Identity;  // s_{j2+1}
            Rational eps = Rational(detail::boundary_eps_num_col(ps, idx.j2, idx.m2)) / Rational(ps.den);
            return detail::boundary_fast(b, n, idx.j2, idx.l2, ident, eps);
        }
        case Regime::Critical:
            return coeff_discrepancy_pointwise(ps, idx);
    }
    throw std::logic_error("coeff_discrepancy_fast: unreachable");
}

// Independent oracle: exact geometric integration of D_P against the
// Haar function, child box by child box. Nothing from the closed-form
// lemmas enters here.
inline CycloValue coeff_oracle(const PointSet& ps, const HaarIndex& idx) {
    validate_index(ps.b, idx);
    const int b = ps.b;
    struct Child {
        Rational lo, hi;
        long long weight_exp;  // l * k, 0 for a level -1 axis
    };
    auto children = [&](int j, std::int64_t m, int l) {
        std::vector<Child> cs;
        if (j == -1) {
            cs.push_back({Rational(0), Rational(1), 0});
            return cs;
        }
        for (int k = 0; k < b; ++k) {
            Rational lo = Rational(b * m + k) * pow_rational(b, -j - 1);
            Rational hi = Rational(b * m + k + 1) * pow_rational(b, -j - 1);
            cs.push_back({lo, hi, static_cast<long long>(l) * k});
        }
        return cs;
    };
    const auto cx = children(idx.j1, idx.m1, idx.l1);
    const auto cy = children(idx.j2, idx.m2, idx.l2);

    std::vector<Rational> zx(ps.size()), zy(ps.size());
    for (std::int64_t i = 0; i < ps.size(); ++i) {
        zx[i] = Rational(ps.xs[i], ps.den);
        zy[i] = Rational(ps.ys[i], ps.den);
    }

    CycloValue acc(b);
    for (const auto& ix : cx) {
        for (const auto& iy : cy) {
            // (1/N) sum_z |(z1,1) ^ box_x| * |(z2,1) ^ box_y|
            Rational mass(0);
            for (std::int64_t i = 0; i < ps.size(); ++i) {
                Rational ox = ix.hi - std::max(zx[i], ix.lo);
                if (ox <= 0) continue;
                Rational oy = iy.hi - std::max(zy[i], iy.lo);
                if (oy <= 0) continue;
                mass += ox * oy;
            }
            mass /= ps.den;
            // minus the exact integral of x1 x2 over the child box
            Rational vol = (ix.hi * ix.hi - ix.lo * ix.lo) * (iy.hi * iy.hi - iy.lo * iy.lo) / 4;
            acc += (mass - vol) * zeta_pow(b, ix.weight_exp + iy.weight_exp);
        }
    }
    return acc;
}

// Magnitude scale per regime: the exact magnitude where the analysis
// pins it, the bound shape (constant 1) in the critical and boundary
// regimes. Tests measure the multiplicative constant against this.
inline double coeff_bound(const HaarIndex& idx, const PointSet& ps) {
    validate_index(ps.b, idx);
    const int b = ps.b, n = ps.n;
    auto inv_abs = [b](int l) { return 1.0 / std::abs(to_complex(zeta_pow(b, l) - CycloValue::one(b))); };
    const double bd = static_cast<double>(b);
    switch (classify_regime(idx, n)) {
        case Regime::Coarse:
            return std::pow(bd, -2.0 * n) * inv_abs(idx.l1) * inv_abs(idx.l2);
        case Regime::Critical:
            return std::pow(bd, -static_cast<double>(n + idx.j1 + idx.j2));
        case Regime::FineBoth:
            return std::pow(bd, -2.0 * idx.j1 - 2.0 * idx.j2 - 2.0) * inv_abs(idx.l1) * inv_abs(idx.l2);
        case Regime::RowBoundary:
            return std::pow(bd, -static_cast<double>(n + idx.j1));
        case Regime::ColBoundary:
            return std::pow(bd, -static_cast<double>(n + idx.j2));
        case Regime::RowFine:
            return 0.5 * std::pow(bd, -2.0 * idx.j1 - 1.0) * inv_abs(idx.l1);
        case Regime::ColFine:
            return 0.5 * std::pow(bd, -2.0 * idx.j2 - 1.0) * inv_abs(idx.l2);
        case Regime::Corner:
            return std::abs(to_complex(corner_coeff(ps)));
    }
    throw std::logic_error("coeff_bound: unreachable");
}

}  // namespace badic
