#pragma once

// Discrete Besov quasi-norm of the discrepancy function, the Parseval
// L2 identity with an analytic tail, the rate diagnostic against
// b^{n(r-1)} n^{1/q}, and a small QMC integration demo.

#include "badic/digitsums.hpp"
#include "badic/discrepancy.hpp"
#include "badic/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace badic {

struct NormParams {
    double p = 2.0;  // inner exponent, may be INFINITY
    double q = 2.0;  // outer exponent, may be INFINITY
    double r = 0.0;  // smoothness
    int J = -1;      // truncation level; negative means n + 4
};

struct NormResult {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the increase if J were infinite
};

namespace detail {

inline bool is_inf(double x) { return std::isinf(x); }

inline void validate_norm_params(const NormParams& np) {
    if (!(np.p >= 1.0) || !(np.q >= 1.0))
        throw std::domain_error("NormParams: need p, q in [1, inf]");
    const double ip = is_inf(np.p) ? 0.0 : 1.0 / np.p;
    if (!(np.r > ip - 1.0 && np.r < std::min(ip, 1.0)))
        throw std::domain_error("NormParams: r outside the admissible band (1/p - 1, min(1/p, 1))");
}

// sum_l 1 / |zeta^l - 1|^p, and the max over l for p = inf
inline double root_gap_sum(int b, double p) {
    double acc = 0.0, mx = 0.0;
    for (int l = 1; l < b; ++l) {
        const double g = 1.0 / std::abs(to_complex(zeta_pow(b, l) - CycloValue::one(b)));
        mx = std::max(mx, g);
        acc += std::pow(g, p);
    }
    return is_inf(p) ? mx : acc;
}

// One level of the Eq.-(6) outer sum (or the level quantity for
// q = inf), from the fast coefficient classes.
struct LevelTerm {
    double qsum_term = 0.0;   // contribution to the q-sum, q < inf
    double sup_term = 0.0;    // level quantity, q = inf
};

inline LevelTerm besov_level_term(const PointSet& ps, int j1, int j2, const NormParams& np) {
    const double ip = is_inf(np.p) ? 0.0 : 1.0 / np.p;
    double inner = 0.0;
    sweep::enumerate_level(ps, j1, j2, sweep::Method::Fast, [&](const sweep::CoeffClass& c) {
        const double mag = std::abs(to_complex(c.value));
        if (is_inf(np.p))
            inner = std::max(inner, mag);
        else
            inner += static_cast<double>(c.count) * std::pow(mag, np.p);
    });
    const double base = static_cast<double>(ps.b);
    LevelTerm t;
    const double inner_q = is_inf(np.p) ? std::pow(inner, np.q) : std::pow(inner, np.q / np.p);
    const double inner_1 = is_inf(np.p) ? inner : std::pow(inner, 1.0 / np.p);
    t.sup_term = std::pow(base, (j1 + j2) * (np.r - ip + 1.0)) * inner_1;
    if (!is_inf(np.q))
        t.qsum_term = std::pow(base, (j1 + j2) * (np.r - ip + 1.0) * np.q) * inner_q;
    return t;
}

// Analytic tail of the q-sum over levels with max(j1,j2) > J, valid
// once J >= n: beyond that every coefficient is a volume-function
// coefficient and the level sums are geometric.
inline double besov_tail_qsum(int b, const NormParams& np, int J) {
    const double ip = is_inf(np.p) ? 0.0 : 1.0 / np.p;
    const double kp = root_gap_sum(b, np.p);
    const double bd = b;
    if (is_inf(np.q)) return 0.0;  // handled by candidates, not the q-sum
    const double v = std::pow(bd, (np.r - 1.0) * np.q);
    const double A = std::pow(v, J + 1) / (1.0 - v);
    const double B = (1.0 - std::pow(v, J + 1)) / (1.0 - v);
    const double F = 1.0 / (1.0 - v);
    const double kp2 = is_inf(np.p) ? std::pow(kp, 2.0 * np.q) : std::pow(kp, 2.0 * np.q / np.p);
    const double kp1 = is_inf(np.p) ? std::pow(kp, np.q) : std::pow(kp, np.q / np.p);
    const double cpp = std::pow(bd, -2.0 * np.q) * kp2;
    const double cb = std::pow(0.5, np.q) * std::pow(bd, -np.q * (np.r - ip + 2.0)) * kp1;
    return cpp * A * (F + B) + 2.0 * cb * A;
}

// level quantities at the first tail levels, for the q = inf sup
inline double besov_tail_sup(const PointSet& ps, const NormParams& np, int J) {
    const double ip = is_inf(np.p) ? 0.0 : 1.0 / np.p;
    const double kp = root_gap_sum(ps.b, np.p);
    const double bd = ps.b;
    auto volume_level = [&](int j1, int j2) {
        // all-volume level quantity b^{(j1+j2)(r-1/p+1)} inner^{1/p}
        double inner;
        const double mixed = (j1 >= 0 && j2 >= 0) ? std::pow(bd, -2.0 * (j1 + j2) - 2.0)
                                                  : 0.5 * std::pow(bd, -2.0 * std::max(j1, j2) - 1.0);
        if (is_inf(np.p)) {
            inner = mixed * ((j1 >= 0 && j2 >= 0) ? kp * kp : kp);
        } else {
            const std::int64_t m_cnt = (j1 >= 0 ? pow_i64(ps.b, j1) : 1) * (j2 >= 0 ? pow_i64(ps.b, j2) : 1);
            const double kfac = (j1 >= 0 && j2 >= 0) ? kp * kp : kp;
            inner = std::pow(static_cast<double>(m_cnt) * std::pow(mixed, np.p) * kfac, 1.0 / np.p);
        }
        return std::pow(bd, (j1 + j2) * (np.r - ip + 1.0)) * inner;
    };
    double s = 0.0;
    s = std::max(s, volume_level(J + 1, 0));
    s = std::max(s, volume_level(0, J + 1));
    s = std::max(s, volume_level(J + 1, -1));
    s = std::max(s, volume_level(-1, J + 1));
    return s;
}

}  // namespace detail

// Truncated Eq.-(6) quasi-norm from the fast coefficients, plus a tail
// bound. Levels run over {-1, ..., J}^2; the analytic tail starts at
// max(J, n), any swept levels in between are added to the bound.
inline NormResult besov_quasi_norm(const PointSet& ps, NormParams np) {
    detail::validate_norm_params(np);
    if (np.J < 0) np.J = ps.n + 4;
    const int J = np.J;
    const int Jeff = std::max(J, ps.n);

    double qsum = 0.0, sup = 0.0;
    for (int j1 = -1; j1 <= J; ++j1)
        for (int j2 = -1; j2 <= J; ++j2) {
            auto t = detail::besov_level_term(ps, j1, j2, np);
            qsum += t.qsum_term;
            sup = std::max(sup, t.sup_term);
        }

    double tail_qsum = detail::besov_tail_qsum(ps.b, np, Jeff);
    double tail_sup = detail::besov_tail_sup(ps, np, Jeff);
    for (int j1 = -1; j1 <= Jeff; ++j1)
        for (int j2 = -1; j2 <= Jeff; ++j2) {
            if (std::max(j1, j2) <= J) continue;
            auto t = detail::besov_level_term(ps, j1, j2, np);
            tail_qsum += t.qsum_term;
            tail_sup = std::max(tail_sup, t.sup_term);
        }

    NormResult res;
    if (detail::is_inf(np.q)) {
        res.value = sup;
        res.tail_bound = tail_sup;
    } else {
        res.value = std::pow(qsum, 1.0 / np.q);
        // x -> x^{1/q} is subadditive for q >= 1, so the tail of the
        // q-sum bounds the increase of the norm
        res.tail_bound = std::pow(tail_qsum, 1.0 / np.q);
    }
    return res;
}

// Truncated Parseval sum sum_j b^{max(0,j1)+max(0,j2)} sum |mu|^2, with
// the closed-form geometric tail when requested.
inline double parseval_l2(const PointSet& ps, int J, bool with_tail) {
    if (J < 0) throw std::invalid_argument("parseval_l2: J must be >= 0");
    const double bd = ps.b;
    auto level_sum = [&](int j1, int j2) {
        double s = 0.0;
        sweep::enumerate_level(ps, j1, j2, sweep::Method::Fast, [&](const sweep::CoeffClass& c) {
            const double mag = std::abs(to_complex(c.value));
            s += static_cast<double>(c.count) * mag * mag;
        });
        return std::pow(bd, std::max(0, j1) + std::max(0, j2)) * s;
    };
    double total = 0.0;
    for (int j1 = -1; j1 <= J; ++j1)
        for (int j2 = -1; j2 <= J; ++j2) total += level_sum(j1, j2);
    if (!with_tail) return total;

    const int Jeff = std::max(J, ps.n);
    for (int j1 = -1; j1 <= Jeff; ++j1)
        for (int j2 = -1; j2 <= Jeff; ++j2)
            if (std::max(j1, j2) > J) total += level_sum(j1, j2);
    const double K = detail::root_gap_sum(ps.b, 2.0);
    const double u = 1.0 / (bd * bd);
    const double A = std::pow(u, Jeff + 1) / (1.0 - u);
    const double B = (1.0 - std::pow(u, Jeff + 1)) / (1.0 - u);
    const double F = 1.0 / (1.0 - u);
    total += K * K * u * u * A * (F + B) + K * u * A / 2.0;
    return total;
}

// Exact-rational Parseval sum including the exact tail; needs |mu|^2
// rational, i.e. phi(b) <= 2. Must reproduce the Warnock value exactly.
inline Rational parseval_l2_exact(const PointSet& ps, int J) {
    if (J < ps.n) throw std::invalid_argument("parseval_l2_exact: need J >= n");
    const int b = ps.b;
    Rational total(0);
    for (int j1 = -1; j1 <= J; ++j1)
        for (int j2 = -1; j2 <= J; ++j2) {
            Rational s(0);
            sweep::enumerate_level(ps, j1, j2, sweep::Method::Fast, [&](const sweep::CoeffClass& c) {
                s += Rational(c.count) * abs2_rational(c.value);
            });
            total += pow_rational(b, std::max(0, j1) + std::max(0, j2)) * s;
        }
    // exact geometric tail; K is computed from the inverses, the
    // identity K = (b^2 - 1)/12 is tested elsewhere rather than assumed
    Rational K(0);
    for (int l = 1; l < b; ++l) K += abs2_rational(inv_zeta_m1(b, l));
    const Rational u = Rational(1) / Rational(static_cast<std::int64_t>(b) * b);
    Rational uJ1(1);
    for (int i = 0; i <= J; ++i) uJ1 *= u;
    const Rational A = uJ1 / (1 - u);
    const Rational B = (1 - uJ1) / (1 - u);
    const Rational F = Rational(1) / (1 - u);
    total += K * K * u * u * A * (F + B) + K * u * A / 2;
    return total;
}

enum class PatternRule { Balanced, AllIdentity };

inline SignPattern pattern_for_rule(PatternRule rule, int n) {
    return rule == PatternRule::Balanced ? balanced_pattern(n) : all_identity_pattern(n);
}

struct RateRow {
    int n = 0;
    std::int64_t N = 0;
    double norm = 0.0;
    double reference = 0.0;
    double ratio = 0.0;
};

// Theorem-1.1 diagnostic: norm of D_{R_n} against b^{n(r-1)} n^{1/q}
// over a range of n, J = n + 4.
inline std::vector<RateRow> rate_report(int b, double r, double p, double q, int n_from, int n_to,
                                        PatternRule rule) {
    const double ipp = detail::is_inf(p) ? 0.0 : 1.0 / p;
    if (!(r >= 0.0 && r < ipp))
        throw std::domain_error("rate_report: need 0 <= r < 1/p");
    if (n_from < 1 || n_to < n_from)
        throw std::invalid_argument("rate_report: bad n range");
    std::vector<RateRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        PointSet ps = generate_point_set(b, n, pattern_for_rule(rule, n));
        NormParams np{p, q, r, n + 4};
        RateRow row;
        row.n = n;
        row.N = ps.size();
        row.norm = besov_quasi_norm(ps, np).value;
        row.reference = std::pow(static_cast<double>(b), n * (r - 1.0)) *
                        (detail::is_inf(q) ? 1.0 : std::pow(static_cast<double>(n), 1.0 / q));
        row.ratio = row.norm / row.reference;
        rows.push_back(row);
    }
    return rows;
}

// Built-in integrands with known integrals over the unit square.
struct Integrand {
    std::string id;
    double (*f)(double, double);
    double exact;
};

inline const std::vector<Integrand>& integrand_corpus() {
    static const std::vector<Integrand> corpus = {
        {"one", [](double, double) { return 1.0; }, 1.0},
        {"xy", [](double x, double y) { return x * y; }, 0.25},
        {"x2y2", [](double x, double y) { return x * x * y * y; }, 1.0 / 9.0},
        {"gauss",
         [](double x, double y) { return std::exp(-(x - 0.5) * (x - 0.5) - (y - 0.5) * (y - 0.5)); },
         3.141592653589793238462643 * std::erf(0.5) * std::erf(0.5)},
    };
    return corpus;
}

struct QmcResult {
    double estimate = 0.0;
    double exact = 0.0;
    double error = 0.0;  // estimate - exact, signed
};

inline QmcResult qmc_integrate(const PointSet& ps, const std::string& integrand_id) {
    for (const auto& g : integrand_corpus()) {
        if (g.id != integrand_id) continue;
        double acc = 0.0;
        const double den = static_cast<double>(ps.den);
        for (std::int64_t i = 0; i < ps.size(); ++i)
            acc += g.f(static_cast<double>(ps.xs[i]) / den, static_cast<double>(ps.ys[i]) / den);
        QmcResult res;
        res.estimate = acc / static_cast<double>(ps.size());
        res.exact = g.exact;
        res.error = res.estimate - res.exact;
        return res;
    }
    throw std::invalid_argument("qmc_integrate: unknown integrand '" + integrand_id + "'");
}

}  // namespace badic
