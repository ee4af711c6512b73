#pragma once

// Level-by-level enumeration of Haar coefficients. Within one level
// (j1, j2) all coefficients outside occupied boxes share one closed
// form, so a level is described by a handful of coefficient classes:
// explicit per-box values plus a default with a multiplicity. The three
// evaluation methods (fast closed forms, pointwise sums, geometric
// integration) all enumerate through the same interface, which is what
// the agreement checks and the norm assembly consume.

#include "badic/haar.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace badic::sweep {

enum class Method { Fast, Pointwise, Oracle };

// One class of coefficients at a fixed level and frequency pair:
// either a single explicit box (count 1, box_m valid) or a default
// shared by `count` boxes not listed explicitly.
struct CoeffClass {
    int l1 = 1;
    int l2 = 1;
    std::int64_t count = 0;
    bool is_default = false;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    CycloValue value;
};

struct LevelBuckets {
    struct Box {
        std::int64_t m1, m2;
        std::size_t first, last;  // range in `order`
    };
    std::vector<std::int64_t> order;
    std::vector<Box> boxes;
};

// Group points by the box that contains them (half-open convention).
// Axes at level -1 collapse to m = 0; axes with j > n are allowed, the
// box index is then k * b^{j-n}.
inline LevelBuckets bucket_points(const PointSet& ps, int j1, int j2) {
    const std::int64_t N = ps.size();
    auto box_of = [&ps](int j, std::int64_t k) -> std::int64_t {
        if (j == -1) return 0;
        if (j <= ps.n) return k / pow_i64(ps.b, ps.n - j);
        return k * pow_i64(ps.b, j - ps.n);
    };
    LevelBuckets lb;
    lb.order.resize(N);
    std::iota(lb.order.begin(), lb.order.end(), 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> keys(N);
    for (std::int64_t i = 0; i < N; ++i)
        keys[i] = {box_of(j1, ps.xs[i]), box_of(j2, ps.ys[i])};
    std::sort(lb.order.begin(), lb.order.end(), [&keys](std::int64_t a, std::int64_t b) {
        return keys[a] < keys[b] || (keys[a] == keys[b] && a < b);
    });
    for (std::size_t s = 0; s < lb.order.size();) {
        std::size_t e = s;
        while (e < lb.order.size() && keys[lb.order[e]] == keys[lb.order[s]]) ++e;
        lb.boxes.push_back({keys[lb.order[s]].first, keys[lb.order[s]].second, s, e});
        s = e;
    }
    return lb;
}

namespace detail {

inline std::int64_t m_count(int b, int j) { return j == -1 ? 1 : pow_i64(b, j); }

// Per-axis volume factors of the oracle: for every box m of the axis,
// sum_k zeta^{lk} * integral of x over the child, computed from the
// geometry. The values come out identical for every m; the sweep
// verifies that instead of assuming it.
struct OracleAxis {
    // value[l] (index 0 unused for j >= 0; single entry for j = -1)
    std::vector<CycloValue> value;
};

inline OracleAxis oracle_axis_volume(int b, int j) {
    OracleAxis ax;
    if (j == -1) {
        ax.value.assign(1, CycloValue(b, Rational(1, 2)));
        return ax;
    }
    ax.value.assign(b, CycloValue(b));
    const std::int64_t boxes = pow_i64(b, j);
    const Rational den2 = pow_rational(b, 2 * j + 2);
    for (int l = 1; l < b; ++l) {
        CycloValue ref(b);
        for (std::int64_t m = 0; m < boxes; ++m) {
            CycloValue v(b);
            for (int k = 0; k < b; ++k) {
                // ((bm+k+1)^2 - (bm+k)^2) / (2 b^{2j+2})
                Rational part = Rational(2 * (b * m + k) + 1) / (2 * den2);
                v += part * zeta_pow(b, static_cast<long long>(l) * k);
            }
            if (m == 0)
                ref = v;
            else if (!(v == ref))
                throw std::logic_error("oracle_axis_volume: per-box volume factors differ");
        }
        ax.value[l] = ref;
    }
    return ax;
}

// Per-point, per-axis oracle factor: sum over the children of box m of
// zeta^{lk} * |(z,1) ^ child|, from overlap lengths alone.
inline CycloValue oracle_point_axis(const PointSet& ps, int j, std::int64_t m, int l,
                                    std::int64_t k_num) {
    const int b = ps.b;
    if (j == -1) return CycloValue(ps.b, Rational(ps.den - k_num, ps.den));
    const auto& ht = badic::detail::hot_tables(b);
    CycloValue acc(b);
    const Rational z = Rational(k_num, ps.den);
    const Rational width = pow_rational(b, -j - 1);
    for (int k = 0; k < b; ++k) {
        Rational lo = Rational(b * m + k) * width;
        Rational hi = lo + width;
        Rational overlap = hi - std::max(z, lo);
        if (overlap <= 0) continue;
        acc += overlap * ht.zeta[static_cast<std::size_t>((static_cast<std::int64_t>(l) * k) % b)];
    }
    return acc;
}

}  // namespace detail

// Enumerate the coefficient classes of one level under the given
// method. Explicit classes always precede the default of their (l1,l2)
// pair; boxes appear in bucket order.
template <class F>
void enumerate_level(const PointSet& ps, int j1, int j2, Method method, F&& emit) {
    const int b = ps.b, n = ps.n;
    const std::int64_t m_total = detail::m_count(b, j1) * detail::m_count(b, j2);
    const int l1_max = j1 == -1 ? 1 : b - 1;
    const int l2_max = j2 == -1 ? 1 : b - 1;

    auto volume_default = [&](int l1, int l2) {
        HaarIndex idx{j1, j2, 0, 0, l1, l2};
        return -coeff_volume(b, idx);
    };

    if (method == Method::Fast) {
        const Regime reg = classify_level(j1, j2, n);
        switch (reg) {
            case Regime::Corner:
                emit(CoeffClass{1, 1, 1, false, 0, 0, corner_coeff(ps)});
                return;
            case Regime::Coarse: {
                const Rational sigma(flip_sign(ps.pattern, n - j1) * flip_sign(ps.pattern, j2 + 1));
                for (int l1 = 1; l1 < b; ++l1)
                    for (int l2 = 1; l2 < b; ++l2) {
                        CycloValue v = (sigma * pow_rational(b, -2 * n)) *
                                       (inv_zeta_m1(b, l1) * inv_zeta_m1(b, l2));
                        emit(CoeffClass{l1, l2, m_total, true, 0, 0, std::move(v)});
                    }
                return;
            }
            case Regime::FineBoth:
            case Regime::RowFine:
            case Regime::ColFine:
                for (int l1 = 1; l1 <= l1_max; ++l1)
                    for (int l2 = 1; l2 <= l2_max; ++l2)
                        emit(CoeffClass{l1, l2, m_total, true, 0, 0, volume_default(l1, l2)});
                return;
            case Regime::RowBoundary:
                for (int l1 = 1; l1 < b; ++l1) {
                    const bool ident = ps.pattern.maps[n - j1 - 1] == DigitMap::Identity;
                    for (std::int64_t m1 = 0; m1 < detail::m_count(b, j1); ++m1) {
                        Rational eps = Rational(badic::detail::boundary_eps_num_row(ps, j1, m1)) / Rational(ps.den);
                        emit(CoeffClass{l1, 1, 1, false, m1, 0,
                                        badic::detail::boundary_fast(b, n, j1, l1, ident, eps)});
                    }
                }
                return;
            case Regime::ColBoundary:
                for (int l2 = 1; l2 < b; ++l2) {
                    const bool ident = ps.pattern.maps[j2] == DigitMap::Identity;
                    for (std::int64_t m2 = 0; m2 < detail::m_count(b, j2); ++m2) {
                        Rational eps = Rational(badic::detail::boundary_eps_num_col(ps, j2, m2)) / Rational(ps.den);
                        emit(CoeffClass{1, l2, 1, false, 0, m2,
                                        badic::detail::boundary_fast(b, n, j2, l2, ident, eps)});
                    }
                }
                return;
            case Regime::Critical: {
                LevelBuckets lb = bucket_points(ps, j1, j2);
                for (int l1 = 1; l1 < b; ++l1)
                    for (int l2 = 1; l2 < b; ++l2) {
                        const CycloValue mvol = volume_default(l1, l2);  // = -coeff_volume
                        for (const auto& box : lb.boxes) {
                            HaarIndex idx{j1, j2, box.m1, box.m2, l1, l2};
                            CycloValue v = badic::detail::pointwise_sum(ps, idx, lb.order.begin() + box.first,
                                                                        lb.order.begin() + box.last);
                            v += mvol;
                            emit(CoeffClass{l1, l2, 1, false, box.m1, box.m2, std::move(v)});
                        }
                        const std::int64_t rest = m_total - static_cast<std::int64_t>(lb.boxes.size());
                        if (rest > 0) emit(CoeffClass{l1, l2, rest, true, 0, 0, mvol});
                    }
                return;
            }
        }
        return;
    }

    // Pointwise and Oracle enumerate every occupied box explicitly and
    // one default class for the rest, whatever the regime.
    LevelBuckets lb = bucket_points(ps, j1, j2);

    if (method == Method::Pointwise) {
        for (int l1 = 1; l1 <= l1_max; ++l1)
            for (int l2 = 1; l2 <= l2_max; ++l2) {
                const CycloValue mvol = volume_default(l1, l2);
                for (const auto& box : lb.boxes) {
                    HaarIndex idx{j1, j2, box.m1, box.m2, l1, l2};
                    CycloValue v = badic::detail::pointwise_sum(ps, idx, lb.order.begin() + box.first,
                                                                lb.order.begin() + box.last);
                    v += mvol;
                    emit(CoeffClass{l1, l2, 1, false, box.m1, box.m2, std::move(v)});
                }
                const std::int64_t rest = m_total - static_cast<std::int64_t>(lb.boxes.size());
                if (rest > 0) emit(CoeffClass{l1, l2, rest, true, 0, 0, mvol});
            }
        return;
    }

    // Oracle: per-axis volume factors (verified uniform across boxes)
    // plus per-point overlap factors inside occupied boxes.
    detail::OracleAxis ax1 = detail::oracle_axis_volume(b, j1);
    detail::OracleAxis ax2 = detail::oracle_axis_volume(b, j2);
    auto axis_value = [](const detail::OracleAxis& ax, int l) -> const CycloValue& {
        return ax.value.size() == 1 ? ax.value[0] : ax.value[l];
    };

    for (int l1 = 1; l1 <= l1_max; ++l1)
        for (int l2 = 1; l2 <= l2_max; ++l2) {
            const CycloValue vol = axis_value(ax1, l1) * axis_value(ax2, l2);
            for (const auto& box : lb.boxes) {
                CycloValue mass(b);
                for (std::size_t t = box.first; t < box.last; ++t) {
                    const std::int64_t i = lb.order[t];
                    CycloValue fx = detail::oracle_point_axis(ps, j1, box.m1, l1, ps.xs[i]);
                    if (fx.is_zero()) continue;
                    CycloValue fy = detail::oracle_point_axis(ps, j2, box.m2, l2, ps.ys[i]);
                    mass += fx * fy;
                }
                mass *= Rational(1, ps.den);
                emit(CoeffClass{l1, l2, 1, false, box.m1, box.m2, mass - vol});
            }
            const std::int64_t rest = m_total - static_cast<std::int64_t>(lb.boxes.size());
            if (rest > 0)
                emit(CoeffClass{l1, l2, rest, true, 0, 0, -vol});
        }
}

}  // namespace badic::sweep
