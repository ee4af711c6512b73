#pragma once

// Exact arithmetic in Z[zeta_b] (x) Q: values are polynomials in the
// primitive b-th root of unity, reduced modulo the b-th cyclotomic
// polynomial. Reduction gives a canonical coordinate vector of length
// phi(b), so equality of values is equality of coordinates.

#include "badic/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace badic {

using ComplexF = std::complex<double>;

// Phi_b as integer coefficients, index = power, monic.
// Built by dividing x^b - 1 by Phi_d for every proper divisor d of b.
inline std::vector<long long> cyclotomic_poly(int b) {
    if (b < 1) throw std::invalid_argument("cyclotomic_poly: b must be >= 1");
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    // exact division of integer polynomials, remainder must vanish
    auto divide = [](std::vector<long long> num, const std::vector<long long>& den) {
        std::vector<long long> quot(num.size() - den.size() + 1, 0);
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            long long c = num[k + den.size() - 1];  // den is monic
            quot[k] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i < den.size(); ++i)
                num[k + i] -= c * den[i];
        }
        for (long long c : num)
            if (c != 0) throw std::logic_error("cyclotomic_poly: inexact division");
        return quot;
    };

    std::function<const std::vector<long long>&(int)> phi = [&](int m) -> const std::vector<long long>& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        std::vector<long long> p(m + 1, 0);  // x^m - 1
        p[0] = -1;
        p[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) p = divide(std::move(p), phi(d));
        return cache.emplace(m, std::move(p)).first->second;
    };
    return phi(b);
}

namespace detail {

// Immutable per-base tables: Phi_b, zeta powers in the reduced basis,
// and exact inverses of (zeta^l - 1). Instances live for the whole
// process so values can hold a plain pointer.
struct CycloBase {
    int b = 0;
    int phi = 0;
    std::vector<long long> phi_poly;
    // zpow[e] = coordinates of zeta^e over 1, zeta, ..., zeta^{phi-1}
    std::vector<std::vector<long long>> zpow;

    explicit CycloBase(int base) : b(base), phi_poly(cyclotomic_poly(base)) {
        phi = static_cast<int>(phi_poly.size()) - 1;
        int emax = std::max(2 * phi - 1, b);
        zpow.resize(emax + 1);
        for (int e = 0; e <= emax; ++e) {
            if (e < phi) {
                zpow[e].assign(phi, 0);
                zpow[e][e] = 1;
            } else {
                // zeta^e = zeta * zeta^{e-1}; the overflow coordinate
                // folds back through zeta^phi = -(lower part of Phi_b)
                std::vector<long long> v(phi, 0);
                const auto& prev = zpow[e - 1];
                long long top = prev[phi - 1];
                for (int k = 1; k < phi; ++k) v[k] = prev[k - 1];
                for (int k = 0; k < phi; ++k) v[k] -= top * phi_poly[k];
                zpow[e] = std::move(v);
            }
        }
    }
};

inline const CycloBase* get_base(int b) {
    if (b < 2) throw std::invalid_argument("cyclotomic base must be >= 2");
    static std::map<int, std::unique_ptr<CycloBase>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(b);
    if (it == registry.end())
        it = registry.emplace(b, std::make_unique<CycloBase>(b)).first;
    return it->second.get();
}

}  // namespace detail

class CycloValue {
  public:
    CycloValue() = default;
    explicit CycloValue(int b) : base_(detail::get_base(b)), c_(base_->phi) {}
    CycloValue(int b, const Rational& r) : CycloValue(b) { c_[0] = r; }

    static CycloValue zero(int b) { return CycloValue(b); }
    static CycloValue one(int b) { return CycloValue(b, Rational(1)); }

    int base() const { return base_ ? base_->b : 0; }
    int degree() const { return base_ ? base_->phi : 0; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // zero coordinates on all strictly positive powers of zeta
    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    friend bool operator==(const CycloValue& a, const CycloValue& b) {
        return a.base_ == b.base_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloValue& a, const CycloValue& b) { return !(a == b); }

    CycloValue& operator+=(const CycloValue& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    CycloValue& operator-=(const CycloValue& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    CycloValue& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
    friend CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }
    friend CycloValue operator-(CycloValue a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend CycloValue operator*(CycloValue a, const Rational& s) { return a *= s; }
    friend CycloValue operator*(const Rational& s, CycloValue a) { return a *= s; }

    friend CycloValue operator*(const CycloValue& a, const CycloValue& b) {
        a.check_same(b);
        const int phi = a.base_->phi;
        std::vector<Rational> prod(2 * phi - 1);
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycloValue r(a.base_->b);
        for (int d = 0; d < phi; ++d) r.c_[d] = std::move(prod[d]);
        for (int d = phi; d < 2 * phi - 1; ++d) {
            if (prod[d] == 0) continue;
            const auto& fold = a.base_->zpow[d];
            for (int k = 0; k < phi; ++k)
                if (fold[k] != 0) r.c_[k] += prod[d] * fold[k];
        }
        return r;
    }

  private:
    void check_same(const CycloValue& o) const {
        if (base_ != o.base_)
            throw std::invalid_argument("CycloValue: base mismatch");
    }

    friend CycloValue zeta_pow(int, long long);
    friend CycloValue conj(const CycloValue&);

    const detail::CycloBase* base_ = nullptr;
    std::vector<Rational> c_;
};

// Exact representative of zeta_b^(k mod b).
inline CycloValue zeta_pow(int b, long long k) {
    CycloValue v(b);
    long long e = k % b;
    if (e < 0) e += b;
    const auto& coords = v.base_->zpow[e];
    for (int i = 0; i < v.base_->phi; ++i) v.c_[i] = coords[i];
    return v;
}

// Complex conjugation, zeta^k -> zeta^{b-k}.
inline CycloValue conj(const CycloValue& x) {
    const int b = x.base();
    CycloValue r(b);
    for (int k = 0; k < x.degree(); ++k) {
        if (x.coeffs()[k] == 0) continue;
        const auto& coords = x.base_->zpow[(b - k) % b];
        for (int i = 0; i < x.degree(); ++i)
            if (coords[i] != 0) r.c_[i] += x.coeffs()[k] * coords[i];
    }
    return r;
}

// Float projection: evaluate the reduced polynomial at e^{2 pi i / b}.
inline ComplexF to_complex(const CycloValue& x) {
    const int b = x.base();
    ComplexF sum(0.0, 0.0);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < x.degree(); ++k) {
        if (x.coeffs()[k] == 0) continue;
        double angle = two_pi * k / b;
        sum += to_double(x.coeffs()[k]) * ComplexF(std::cos(angle), std::sin(angle));
    }
    return sum;
}

inline double abs_complex(const CycloValue& x) { return std::abs(to_complex(x)); }

// x * conj(x) when it reduces to a rational (always the case for
// phi(b) <= 2, which covers the exact-Parseval bases).
inline Rational abs2_rational(const CycloValue& x) {
    CycloValue p = x * conj(x);
    if (!p.is_rational())
        throw std::domain_error("abs2_rational: |x|^2 not rational for this base");
    return p.rational_part();
}

// Exact inverse of (zeta^l - 1), from prod_{l'}(1 - zeta^{l'}) = b.
inline const CycloValue& inv_zeta_m1(int b, int l) {
    if (l < 1 || l >= b) throw std::invalid_argument("inv_zeta_m1: l out of range");
    struct Table {
        std::vector<CycloValue> inv;
    };
    static std::map<int, Table> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it == cache.end()) {
        Table t;
        t.inv.resize(b);
        for (int ell = 1; ell < b; ++ell) {
            CycloValue prod = CycloValue::one(b);
            for (int k = 1; k < b; ++k) {
                if (k == ell) continue;
                prod = prod * (CycloValue::one(b) - zeta_pow(b, k));
            }
            // (zeta^l - 1)^{-1} = -prod_{k != l}(1 - zeta^k) / b
            t.inv[ell] = -(prod * Rational(1, b));
        }
        it = cache.emplace(b, std::move(t)).first;
    }
    return it->second.inv[l];
}

}  // namespace badic
