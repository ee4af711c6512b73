#pragma once

// Named verification suites over the whole library: net property,
// coefficient method agreement, digit-sum identities, Parseval against
// the exact Warnock value, magnitude audit, tail constant, rate
// diagnostics. The CLI `verify` command runs them at reduced scale; the
// acceptance binary runs them at full scale.

#include "badic/badic.hpp"

#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace badic::checks {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

inline HaarIndex random_index(int b, int j_max, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> jd(-1, j_max);
    HaarIndex idx;
    idx.j1 = jd(rng);
    idx.j2 = jd(rng);
    auto draw = [&](int j, std::int64_t& m, int& l) {
        if (j == -1) {
            m = 0;
            l = 1;
            return;
        }
        m = std::uniform_int_distribution<std::int64_t>(0, pow_i64(b, j) - 1)(rng);
        l = std::uniform_int_distribution<int>(1, b - 1)(rng);
    };
    draw(idx.j1, idx.m1, idx.l1);
    draw(idx.j2, idx.m2, idx.l2);
    return idx;
}

// Everything one method says about one level, keyed by the frequency
// pair: explicit boxes plus an optional shared default.
struct LevelView {
    struct PerL {
        std::vector<std::tuple<std::int64_t, std::int64_t, CycloValue>> boxes;
        bool has_default = false;
        CycloValue def;
        std::int64_t default_count = 0;
    };
    std::vector<PerL> per_l;  // index (l1-1)*(b-1) + (l2-1), or 0 for -1 axes
    std::int64_t m_total = 0;
};

inline LevelView collect_level(const PointSet& ps, int j1, int j2, sweep::Method method) {
    const int b = ps.b;
    const int n1 = j1 == -1 ? 1 : b - 1;
    const int n2 = j2 == -1 ? 1 : b - 1;
    LevelView view;
    view.per_l.resize(static_cast<std::size_t>(n1) * n2);
    view.m_total = (j1 == -1 ? 1 : pow_i64(b, j1)) * (j2 == -1 ? 1 : pow_i64(b, j2));
    sweep::enumerate_level(ps, j1, j2, method, [&](const sweep::CoeffClass& c) {
        auto& slot = view.per_l[static_cast<std::size_t>(c.l1 - 1) * n2 + (c.l2 - 1)];
        if (c.is_default) {
            slot.has_default = true;
            slot.def = c.value;
            slot.default_count = c.count;
        } else {
            slot.boxes.emplace_back(c.m1, c.m2, c.value);
        }
    });
    for (auto& slot : view.per_l)
        std::sort(slot.boxes.begin(), slot.boxes.end(), [](const auto& a, const auto& b2) {
            return std::make_pair(std::get<0>(a), std::get<1>(a)) <
                   std::make_pair(std::get<0>(b2), std::get<1>(b2));
        });
    return view;
}

// Compare two level views index by index: explicit boxes against each
// other or against the other side's default, defaults against defaults
// for the uncovered remainder. Returns the number of (m, l) indices
// certified equal, or -1 on any mismatch.
inline std::int64_t compare_views(const LevelView& a, const LevelView& b) {
    if (a.per_l.size() != b.per_l.size() || a.m_total != b.m_total) return -1;
    std::int64_t certified = 0;
    for (std::size_t s = 0; s < a.per_l.size(); ++s) {
        const auto& pa = a.per_l[s];
        const auto& pb = b.per_l[s];
        std::size_t ia = 0, ib = 0;
        std::int64_t explicit_union = 0;
        while (ia < pa.boxes.size() || ib < pb.boxes.size()) {
            ++explicit_union;
            auto key = [](const auto& t) { return std::make_pair(std::get<0>(t), std::get<1>(t)); };
            if (ib >= pb.boxes.size() || (ia < pa.boxes.size() && key(pa.boxes[ia]) < key(pb.boxes[ib]))) {
                if (!pb.has_default || !(std::get<2>(pa.boxes[ia]) == pb.def)) return -1;
                ++ia;
            } else if (ia >= pa.boxes.size() || key(pb.boxes[ib]) < key(pa.boxes[ia])) {
                if (!pa.has_default || !(std::get<2>(pb.boxes[ib]) == pa.def)) return -1;
                ++ib;
            } else {
                if (!(std::get<2>(pa.boxes[ia]) == std::get<2>(pb.boxes[ib]))) return -1;
                ++ia;
                ++ib;
            }
        }
        const std::int64_t rest = a.m_total - explicit_union;
        if (rest > 0) {
            if (!pa.has_default || !pb.has_default || !(pa.def == pb.def)) return -1;
        }
        certified += a.m_total;
    }
    return certified;
}

}  // namespace detail

// ---------------------------------------------------------------------
// Acceptance-grade suites. Scale parameters are explicit so the quick
// verify can shrink them.
// ---------------------------------------------------------------------

// Every b-adic box at every split j1 + j2 <= n holds exactly
// b^{n-j1-j2} points.
inline CheckResult net_property(const std::vector<int>& bases, int n_max, int patterns,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long boxes_checked = 0;
    for (int b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (int rep = 0; rep < patterns; ++rep) {
                PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
                for (int j1 = 0; j1 <= n; ++j1)
                    for (int j2 = 0; j1 + j2 <= n; ++j2) {
                        if (!verify_net(ps, j1, j2))
                            return {"net_property", false,
                                    detail::fmt("failed at b=%d n=%d j=(%d,%d) pattern=%s", b, n, j1,
                                                j2, ps.pattern.to_string().c_str())};
                        boxes_checked += pow_i64(b, j1 + j2);
                    }
            }
    return {"net_property", true, detail::fmt("%lld boxes exact", boxes_checked)};
}

// Fast, pointwise and integration-oracle coefficients agree exactly on
// every index with max(j1, j2) <= n + 2, certified level by level
// through the sweep views, plus a per-index spot check of the plain
// three entry points on random indices.
inline CheckResult triple_agreement(const std::vector<std::pair<int, int>>& configs, int patterns,
                                    int spot_checks, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long certified = 0, spots = 0;
    for (auto [b, n] : configs) {
        for (int rep = 0; rep < patterns; ++rep) {
            PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
            const int j_max = n + 2;
            for (int j1 = -1; j1 <= j_max; ++j1)
                for (int j2 = -1; j2 <= j_max; ++j2) {
                    auto fast = detail::collect_level(ps, j1, j2, sweep::Method::Fast);
                    auto pw = detail::collect_level(ps, j1, j2, sweep::Method::Pointwise);
                    auto oracle = detail::collect_level(ps, j1, j2, sweep::Method::Oracle);
                    std::int64_t c1 = detail::compare_views(fast, pw);
                    std::int64_t c2 = detail::compare_views(pw, oracle);
                    if (c1 < 0 || c2 < 0)
                        return {"triple_agreement", false,
                                detail::fmt("mismatch at b=%d n=%d j=(%d,%d) pattern=%s", b, n, j1,
                                            j2, ps.pattern.to_string().c_str())};
                    certified += c1;
                }
            for (int s = 0; s < spot_checks; ++s) {
                HaarIndex idx = detail::random_index(b, j_max, rng);
                CycloValue f = coeff_discrepancy_fast(ps, idx);
                CycloValue p = coeff_discrepancy_pointwise(ps, idx);
                CycloValue o = coeff_oracle(ps, idx);
                if (!(f == p && p == o))
                    return {"triple_agreement", false,
                            detail::fmt("spot mismatch b=%d n=%d j=(%d,%d) m=(%" PRId64 ",%" PRId64
                                        ") l=(%d,%d)",
                                        b, n, idx.j1, idx.j2, idx.m1, idx.m2, idx.l1, idx.l2)};
                ++spots;
            }
        }
    }
    return {"triple_agreement", true,
            detail::fmt("%lld (m,l) indices certified equal, %lld per-index spot checks", certified,
                        spots)};
}

// Closed forms of the digit sums against brute-force enumeration; at
// b = 2 all 2^n patterns exhaustively (position invariance).
inline CheckResult digit_sums(const std::vector<int>& bases, int n_max) {
    long long cases = 0;
    for (int b : bases)
        for (int n = 1; n <= n_max; ++n) {
            // x, y, z sums against direct enumeration
            Rational xe(0), ye(0), ze(0);
            const std::int64_t total = pow_i64(b, n);
            std::vector<int> t(n, 0);
            for (std::int64_t rank = 0; rank < total; ++rank) {
                for (int i = 1; i <= n; ++i) {
                    xe += Rational(t[i - 1]) * pow_rational(b, -i);
                    ye += Rational(t[i - 1]) * pow_rational(b, i);
                    for (int j = 1; j <= n; ++j)
                        ze += Rational(t[i - 1] * t[j - 1]) * pow_rational(b, i - j);
                }
                for (int i = n - 1; i >= 0; --i) {
                    if (++t[i] < b) break;
                    t[i] = 0;
                }
            }
            if (xe != x_sum(b, n) || ye != y_sum(b, n) || ze != z_sum(b, n))
                return {"digit_sums", false, detail::fmt("x/y/z mismatch at b=%d n=%d", b, n)};
            cases += 3;

            // cross sum: all 2^n patterns, exhaustive position invariance
            std::vector<SignPattern> pats;
            for (int mask = 0; mask < (1 << n); ++mask) {
                SignPattern p;
                for (int i = 0; i < n; ++i)
                    p.maps.push_back((mask >> i) & 1 ? DigitMap::Identity : DigitMap::Reversal);
                pats.push_back(p);
            }
            for (const auto& p : pats) {
                if (cross_sum_brute(b, n, p) != cross_sum(b, n, a_count(p)))
                    return {"digit_sums", false,
                            detail::fmt("cross sum mismatch b=%d n=%d pattern=%s", b, n,
                                        p.to_string().c_str())};
                ++cases;
            }
        }
    return {"digit_sums", true, detail::fmt("%lld identities exact", cases)};
}

// b^{-n} sum (1-z1)(1-z2) - 1/4 equals the closed-form corner
// coefficient, and the Lemma-4.7 identity ties the sum to the cross sum.
inline CheckResult corner_identity(int b_max, int n_max, int patterns, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long cases = 0;
    for (int b = 2; b <= b_max; ++b)
        for (int n = 1; n <= n_max; ++n)
            for (int rep = 0; rep < patterns; ++rep) {
                PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
                Rational cs = corner_sum(ps);
                Rational lhs = pow_rational(b, -n) * cs - Rational(1, 4);
                CycloValue corner = corner_coeff(ps);
                if (!corner.is_rational() || corner.rational_part() != lhs)
                    return {"corner_identity", false,
                            detail::fmt("corner mismatch b=%d n=%d pattern=%s", b, n,
                                        ps.pattern.to_string().c_str())};
                // Lemma 4.7: sum = 1 + b^{-n-1} * cross sum
                if (cs != Rational(1) + pow_rational(b, -n - 1) * cross_sum(b, n, a_count(ps.pattern)))
                    return {"corner_identity", false,
                            detail::fmt("Lemma-4.7 identity failed b=%d n=%d", b, n)};
                ++cases;
            }
    return {"corner_identity", true, detail::fmt("%lld cases exact", cases)};
}

// Truncated Parseval sum at J = n + 5 with analytic tail against the
// exact Warnock rational, within rtol.
inline CheckResult parseval_vs_warnock(const std::vector<int>& bases, int n_max, int patterns,
                                       double rtol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (int rep = 0; rep < patterns; ++rep) {
                PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
                const double approx = parseval_l2(ps, n + 5, true);
                const double exact = to_double(l2_squared_exact(ps));
                const double rel = std::abs(approx - exact) / exact;
                worst = std::max(worst, rel);
                if (!(rel <= rtol))
                    return {"parseval_vs_warnock", false,
                            detail::fmt("rel err %.3e > %.1e at b=%d n=%d", rel, rtol, b, n)};
            }
    return {"parseval_vs_warnock", true, detail::fmt("worst relative error %.3e", worst)};
}

// Exact-rational Parseval sum (truncation + exact tail) equals the
// Warnock rational exactly; the strongest single identity in the suite.
inline CheckResult parseval_exact_identity(const std::vector<int>& bases, int n_max, int patterns,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long cases = 0;
    for (int b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (int rep = 0; rep < patterns; ++rep) {
                PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
                if (parseval_l2_exact(ps, n + 5) != l2_squared_exact(ps))
                    return {"parseval_exact_identity", false, detail::fmt("b=%d n=%d", b, n)};
                ++cases;
            }
    return {"parseval_exact_identity", true, detail::fmt("%lld exact equalities", cases)};
}

// sum_l |zeta^l - 1|^{-2} = (b^2 - 1) / 12, float and exact versions.
inline CheckResult tail_constant(int b_max, double tol) {
    double worst = 0.0;
    for (int b = 2; b <= b_max; ++b) {
        double s = 0.0;
        for (int l = 1; l < b; ++l) {
            const double g = std::abs(to_complex(zeta_pow(b, l) - CycloValue::one(b)));
            s += 1.0 / (g * g);
        }
        const double want = (static_cast<double>(b) * b - 1.0) / 12.0;
        worst = std::max(worst, std::abs(s - want));
        if (!(std::abs(s - want) <= tol))
            return {"tail_constant", false, detail::fmt("b=%d |diff|=%.3e", b, std::abs(s - want))};
        // exact version whenever |x|^2 lands in Q
        if (cyclotomic_poly(b).size() <= 3) {
            Rational K(0);
            for (int l = 1; l < b; ++l) K += abs2_rational(inv_zeta_m1(b, l));
            if (K != Rational(static_cast<std::int64_t>(b) * b - 1) / 12)
                return {"tail_constant", false, detail::fmt("exact identity failed at b=%d", b)};
        }
    }
    return {"tail_constant", true, detail::fmt("max |diff| %.3e over b<=%d", worst, b_max)};
}

// |mu| <= C * coeff_bound with one global measured C, and the regime-(ii)
// deviation count from the pure-volume magnitude stays within b^n
// deviating boxes per level pair (each box carries (b-1)^2 frequency
// pairs; at b = 2 the two counts coincide).
inline CheckResult magnitude_audit(int b, int n, double c_limit, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
    const std::int64_t cap = pow_i64(b, n) * (b - 1) * (b - 1);
    double c_global = 0.0;
    std::int64_t worst_dev = 0;
    for (int j1 = -1; j1 <= n + 2; ++j1)
        for (int j2 = -1; j2 <= n + 2; ++j2) {
            const bool regime2 = j1 >= 0 && j2 >= 0 && j1 <= n && j2 <= n && j1 + j2 >= n - 1;
            std::int64_t deviating = 0;
            sweep::enumerate_level(ps, j1, j2, sweep::Method::Fast, [&](const sweep::CoeffClass& c) {
                HaarIndex idx{j1, j2, c.m1, c.m2, c.l1, c.l2};
                const double bound = coeff_bound(idx, ps);
                const double mag = std::abs(to_complex(c.value));
                if (bound > 0.0) c_global = std::max(c_global, mag / bound);
                if (regime2) {
                    const Rational vol2 = abs2_rational(coeff_volume(b, idx));
                    if (abs2_rational(c.value) != vol2) deviating += c.count;
                }
            });
            worst_dev = std::max(worst_dev, deviating);
            if (regime2 && deviating > cap)
                return {"magnitude_audit", false,
                        detail::fmt("regime (ii) deviations %" PRId64 " exceed %" PRId64
                                    " at j=(%d,%d)",
                                    deviating, cap, j1, j2)};
        }
    if (!(c_global <= c_limit))
        return {"magnitude_audit", false, detail::fmt("measured C = %.4f > %.1f", c_global, c_limit)};
    return {"magnitude_audit", true,
            detail::fmt("measured C = %.4f, worst regime-(ii) deviation count %" PRId64
                        " (cap %" PRId64 ")",
                        c_global, worst_dev, cap)};
}

// Theorem-1.1 rate diagnostic: balanced-pattern ratio stability, plus
// the all-identity discriminator.
struct RateDiagnostics {
    std::vector<RateRow> balanced;
    std::vector<RateRow> identity;
    double balanced_spread = 0.0;   // max/min of ratio over the n range
    double identity_growth = 0.0;   // ratio at n_max / ratio at n_min
    bool identity_monotone = true;  // ratio nondecreasing in n
    double identity_n_spread = 0.0; // spread of the ratio against b^{-n} n
};

// Random products project correctly, root products hit b exactly, and
// rational arithmetic keeps its canonical form.
inline CheckResult cyclo_arithmetic(int pairs_per_base, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    double worst = 0.0;
    for (int b = 2; b <= 6; ++b) {
        const int phi = static_cast<int>(cyclotomic_poly(b).size()) - 1;
        for (int rep = 0; rep < pairs_per_base; ++rep) {
            CycloValue x(b), y(b);
            for (int k = 0; k < phi; ++k) {
                x += Rational(coef(rng), den(rng)) * zeta_pow(b, k);
                y += Rational(coef(rng), den(rng)) * zeta_pow(b, k);
            }
            const ComplexF lhs = to_complex(x * y);
            const ComplexF rhs = to_complex(x) * to_complex(y);
            worst = std::max(worst, std::abs(lhs - rhs));
            if (!(std::abs(lhs - rhs) <= 1e-10))
                return {"cyclo_arithmetic", false, detail::fmt("projection drift %.3e at b=%d",
                                                               std::abs(lhs - rhs), b)};
        }
    }
    for (int b = 2; b <= 12; ++b) {
        CycloValue prod = CycloValue::one(b);
        for (int l = 1; l < b; ++l) prod = prod * (CycloValue::one(b) - zeta_pow(b, l));
        if (!(prod == CycloValue(b, Rational(b))))
            return {"cyclo_arithmetic", false, detail::fmt("root product != b at b=%d", b)};
    }
    // canonical form of rational results under random arithmetic
    for (int rep = 0; rep < 500; ++rep) {
        Rational a(coef(rng), den(rng)), c(coef(rng), den(rng)), d(coef(rng), den(rng));
        if ((a + c) + d != a + (c + d) || a * (c + d) != a * c + a * d)
            return {"cyclo_arithmetic", false, "rational arithmetic not associative/distributive"};
        if (a + c != c + a || a * c != c * a)
            return {"cyclo_arithmetic", false, "rational arithmetic not commutative"};
        Rational s = a * c - d;
        if (denominator(s) <= 0 || gcd(numerator(s) < 0 ? BigInt(-numerator(s)) : numerator(s),
                                       denominator(s)) != 1)
            return {"cyclo_arithmetic", false, "rational not in lowest terms"};
    }
    return {"cyclo_arithmetic", true, detail::fmt("worst projection drift %.3e", worst)};
}

// Monte-Carlo average of D^2 against the exact Warnock value, within
// three standard errors.
inline CheckResult mc_crosscheck(const std::vector<int>& bases, int n_max, int samples,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_sigma = 0.0;
    for (int b : bases)
        for (int n = 1; n <= n_max; ++n) {
            PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
            const double exact = to_double(l2_squared_exact(ps));
            const std::int64_t scale = std::int64_t(1) << 53;
            double sum = 0.0, sum2 = 0.0;
            for (int s = 0; s < samples; ++s) {
                const std::int64_t rx = static_cast<std::int64_t>(rng() >> 11);
                const std::int64_t ry = static_cast<std::int64_t>(rng() >> 11);
                std::int64_t cnt = 0;
                for (std::int64_t i = 0; i < ps.size(); ++i)
                    cnt += (static_cast<__int128>(ps.xs[i]) * scale < static_cast<__int128>(rx) * ps.den) &&
                           (static_cast<__int128>(ps.ys[i]) * scale < static_cast<__int128>(ry) * ps.den);
                const double d = static_cast<double>(cnt) / static_cast<double>(ps.size()) -
                                 (static_cast<double>(rx) / scale) * (static_cast<double>(ry) / scale);
                sum += d * d;
                sum2 += d * d * d * d;
            }
            const double mean = sum / samples;
            const double var = std::max(0.0, sum2 / samples - mean * mean);
            const double se = std::sqrt(var / samples);
            const double sig = std::abs(mean - exact) / (se > 0 ? se : 1e-300);
            worst_sigma = std::max(worst_sigma, sig);
            if (!(sig <= 3.0))
                return {"mc_crosscheck", false,
                        detail::fmt("b=%d n=%d deviates %.2f standard errors", b, n, sig)};
        }
    return {"mc_crosscheck", true, detail::fmt("worst deviation %.2f standard errors", worst_sigma)};
}

namespace detail {

// Exact one-axis inner product of two Haar factors with conjugation,
// by brute refinement to the grid one level below the finer index.
inline CycloValue axis_inner_exact(int b, int j1, std::int64_t m1, int l1, int j2, std::int64_t m2,
                                   int l2) {
    const int L = std::max({j1, j2, -1}) + 1;  // refinement level
    const std::int64_t cells = pow_i64(b, L + 1);
    auto value_at = [&](int j, std::int64_t m, int l, std::int64_t cell) -> int {
        // constant on each refinement cell; returns the zeta exponent,
        // or -1 when the factor vanishes there
        if (j == -1) return 0;
        const std::int64_t span = pow_i64(b, L - j);  // refinement cells per child
        const std::int64_t child = cell / span;
        const std::int64_t rel = child - m * b;
        if (rel < 0 || rel >= b) return -1;
        return static_cast<int>((static_cast<std::int64_t>(l) * rel) % b);
    };
    CycloValue acc(b);
    const auto& ht = badic::detail::hot_tables(b);
    for (std::int64_t c = 0; c < cells; ++c) {
        const int e1 = value_at(j1, m1, l1, c);
        if (e1 < 0) continue;
        const int e2 = value_at(j2, m2, l2, c);
        if (e2 < 0) continue;
        acc += ht.zeta[static_cast<std::size_t>(((e1 - e2) % b + b) % b)];  // h1 * conj(h2)
    }
    return acc * pow_rational(b, -L - 1);
}

}  // namespace detail

// Conjugate-pairing orthogonality of the Haar system by brute
// refinement: distinct indices give exactly 0, equal indices give
// exactly b^{-max(0,j1)-max(0,j2)} (i.e. 1 after L2 normalization).
inline CheckResult orthonormality(int b_max, int j_max, int pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long zeros = 0, ones = 0;
    for (int b = 2; b <= b_max; ++b) {
        for (int rep = 0; rep < pairs; ++rep) {
            HaarIndex u = detail::random_index(b, j_max, rng);
            HaarIndex v = detail::random_index(b, j_max, rng);
            CycloValue ip = detail::axis_inner_exact(b, u.j1, u.m1, u.l1, v.j1, v.m1, v.l1) *
                            detail::axis_inner_exact(b, u.j2, u.m2, u.l2, v.j2, v.m2, v.l2);
            const bool same = u.j1 == v.j1 && u.j2 == v.j2 && u.m1 == v.m1 && u.m2 == v.m2 &&
                              u.l1 == v.l1 && u.l2 == v.l2;
            if (same) {
                Rational want = pow_rational(b, -(std::max(0, u.j1) + std::max(0, u.j2)));
                if (!(ip == CycloValue(b, want)))
                    return {"orthonormality", false, detail::fmt("self inner product off at b=%d", b)};
                ++ones;
            } else {
                if (!ip.is_zero())
                    return {"orthonormality", false,
                            detail::fmt("nonzero inner product for distinct indices at b=%d", b)};
                ++zeros;
            }
            // always include one guaranteed self pairing
            CycloValue self = detail::axis_inner_exact(b, u.j1, u.m1, u.l1, u.j1, u.m1, u.l1) *
                              detail::axis_inner_exact(b, u.j2, u.m2, u.l2, u.j2, u.m2, u.l2);
            Rational want = pow_rational(b, -(std::max(0, u.j1) + std::max(0, u.j2)));
            if (!(self == CycloValue(b, want)))
                return {"orthonormality", false, detail::fmt("normalization off at b=%d", b)};
            ++ones;
        }
    }
    return {"orthonormality", true, detail::fmt("%lld zero pairs, %lld unit pairs, all exact", zeros, ones)};
}

// Within the coarse regime the coefficient must not depend on m: the
// pointwise sweep produces per-box values, all equal to the shared
// closed form.
inline CheckResult coarse_m_independence(int b, int n, int patterns, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long levels = 0;
    for (int rep = 0; rep < patterns; ++rep) {
        PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j1 + j2 < n - 1; ++j2) {
                auto view = detail::collect_level(ps, j1, j2, sweep::Method::Pointwise);
                for (const auto& slot : view.per_l) {
                    const CycloValue* ref = nullptr;
                    for (const auto& box : slot.boxes) {
                        if (!ref)
                            ref = &std::get<2>(box);
                        else if (!(std::get<2>(box) == *ref))
                            return {"coarse_m_independence", false,
                                    detail::fmt("m-dependent coarse value at b=%d n=%d j=(%d,%d)", b,
                                                n, j1, j2)};
                    }
                    if (ref && slot.has_default && !(slot.def == *ref))
                        return {"coarse_m_independence", false,
                                detail::fmt("default differs at b=%d n=%d j=(%d,%d)", b, n, j1, j2)};
                }
                ++levels;
            }
    }
    return {"coarse_m_independence", true, detail::fmt("%lld coarse levels uniform", levels)};
}

// sum_k s_i(k) zeta^{lk} = +- b / (zeta^l - 1), cross-multiplied.
inline CheckResult flip_sign_identity(int b_max) {
    for (int b = 2; b <= b_max; ++b)
        for (int l = 1; l < b; ++l)
            for (int ident = 0; ident <= 1; ++ident) {
                CycloValue s(b);
                for (int k = 0; k < b; ++k) {
                    const int mapped = ident ? k : b - 1 - k;
                    s += Rational(mapped) * zeta_pow(b, static_cast<long long>(l) * k);
                }
                CycloValue lhs = s * (zeta_pow(b, l) - CycloValue::one(b));
                CycloValue rhs(b, Rational(ident ? b : -b));
                if (!(lhs == rhs))
                    return {"flip_sign_identity", false, detail::fmt("b=%d l=%d ident=%d", b, l, ident)};
            }
    return {"flip_sign_identity", true, detail::fmt("both map types, b <= %d", b_max)};
}

// The reported tail bound dominates the actual increment when the
// truncation level grows by two.
inline CheckResult truncation_honesty(const std::vector<std::pair<int, int>>& configs,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double tightest = 1e300;
    for (auto [b, n] : configs) {
        PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
        for (double r : {0.0, 0.3}) {
            NormParams np{2.0, 2.0, r, n + 2};
            auto at = besov_quasi_norm(ps, np);
            np.J = n + 4;
            auto at2 = besov_quasi_norm(ps, np);
            const double increment = at2.value - at.value;
            if (!(at.tail_bound >= increment - 1e-18))
                return {"truncation_honesty", false,
                        detail::fmt("tail %.3e < increment %.3e at b=%d n=%d r=%.1f", at.tail_bound,
                                    increment, b, n, r)};
            if (increment > 0) tightest = std::min(tightest, at.tail_bound / increment);
        }
    }
    return {"truncation_honesty", true, detail::fmt("tail/increment >= 1, min observed %.2f", tightest)};
}

// Eq.-(6) aggregate with p = q = 2, r = 0 against the Parseval sum:
// the level weights differ only on -1 axes, by a factor b per axis.
inline CheckResult weight_relation(const std::vector<std::pair<int, int>>& configs,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double lo = 1e300, hi = 0.0;
    for (auto [b, n] : configs) {
        PointSet ps = generate_point_set(b, n, random_pattern(n, rng));
        const int J = n + 3;
        const double par = std::sqrt(parseval_l2(ps, J, false));
        const double eq6 = besov_quasi_norm(ps, NormParams{2.0, 2.0, 0.0, J}).value;
        const double ratio = par / eq6;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        if (!(ratio >= 1.0 / b - 1e-12 && ratio <= b + 1e-12))
            return {"weight_relation", false, detail::fmt("ratio %.4f outside [1/b,b] at b=%d n=%d",
                                                          ratio, b, n)};
    }
    return {"weight_relation", true, detail::fmt("ratio range [%.4f, %.4f]", lo, hi)};
}

inline RateDiagnostics rate_diagnostics(int b, double r, double p, double q, int n_from, int n_to) {
    RateDiagnostics d;
    d.balanced = rate_report(b, r, p, q, n_from, n_to, PatternRule::Balanced);
    d.identity = rate_report(b, r, p, q, n_from, n_to, PatternRule::AllIdentity);
    auto spread = [b](const std::vector<RateRow>& rows, bool against_n) {
        double mn = 1e300, mx = 0.0;
        for (const auto& row : rows) {
            const double ratio =
                against_n ? row.norm / (std::pow(static_cast<double>(b), -row.n) * row.n) : row.ratio;
            mn = std::min(mn, ratio);
            mx = std::max(mx, ratio);
        }
        return mx / mn;
    };
    d.balanced_spread = spread(d.balanced, false);
    d.identity_growth = d.identity.back().ratio / d.identity.front().ratio;
    for (std::size_t i = 1; i < d.identity.size(); ++i)
        if (d.identity[i].ratio < d.identity[i - 1].ratio) d.identity_monotone = false;
    d.identity_n_spread = spread(d.identity, true);
    return d;
}

}  // namespace badic::checks
