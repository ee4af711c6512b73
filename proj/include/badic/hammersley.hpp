#pragma once

// Generalized base-b Hammersley point sets: b^n points whose x digit
// string is the reversal of (t_1..t_n) and whose y digits are per-digit
// maps s_i(t_i), each map either the identity t -> t or the reversal
// t -> b-1-t.

#include "badic/rational.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace badic {

enum class DigitMap : std::uint8_t { Identity, Reversal };

struct SignPattern {
    std::vector<DigitMap> maps;  // maps[i-1] is s_i

    int size() const { return static_cast<int>(maps.size()); }

    // s_i applied to one digit
    int apply(int i, int digit, int b) const {
        return maps[i - 1] == DigitMap::Identity ? digit : b - 1 - digit;
    }

    static SignPattern from_string(const std::string& s) {
        SignPattern p;
        p.maps.reserve(s.size());
        for (char ch : s) {
            if (ch == 'I')
                p.maps.push_back(DigitMap::Identity);
            else if (ch == 'R')
                p.maps.push_back(DigitMap::Reversal);
            else
                throw std::invalid_argument("SignPattern: expected 'I' or 'R', got '" + std::string(1, ch) + "'");
        }
        if (p.maps.empty()) throw std::invalid_argument("SignPattern: empty pattern");
        return p;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(maps.size());
        for (auto m : maps) s.push_back(m == DigitMap::Identity ? 'I' : 'R');
        return s;
    }
};

// a_n = number of identity positions
inline int a_count(const SignPattern& pattern) {
    int a = 0;
    for (auto m : pattern.maps)
        if (m == DigitMap::Identity) ++a;
    return a;
}

// Canonical pattern with a_n = floor(n/2): identities first. Only the
// count matters for the sums this library checks; the placement is a
// fixed choice for reproducibility.
inline SignPattern balanced_pattern(int n) {
    if (n < 1) throw std::invalid_argument("balanced_pattern: n must be >= 1");
    SignPattern p;
    p.maps.assign(n, DigitMap::Reversal);
    for (int i = 0; i < n / 2; ++i) p.maps[i] = DigitMap::Identity;
    return p;
}

inline SignPattern all_identity_pattern(int n) {
    if (n < 1) throw std::invalid_argument("all_identity_pattern: n must be >= 1");
    SignPattern p;
    p.maps.assign(n, DigitMap::Identity);
    return p;
}

template <class Rng>
SignPattern random_pattern(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_pattern: n must be >= 1");
    SignPattern p;
    p.maps.reserve(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < n; ++i)
        p.maps.push_back(coin(rng) ? DigitMap::Identity : DigitMap::Reversal);
    return p;
}

// The b^n points of R_n. Coordinates are k / b^n; numerators are kept
// as integers, Rational views are built on demand. Point order is
// lexicographic in the digit tuple (t_1,...,t_n).
struct PointSet {
    int b = 0;
    int n = 0;
    SignPattern pattern;
    std::int64_t den = 0;            // b^n
    std::vector<std::int64_t> xs;    // x numerators
    std::vector<std::int64_t> ys;    // y numerators

    std::int64_t size() const { return den; }
    Rational x(std::int64_t i) const { return Rational(xs[i]) / Rational(den); }
    Rational y(std::int64_t i) const { return Rational(ys[i]) / Rational(den); }
};

inline PointSet generate_point_set(int b, int n, const SignPattern& pattern) {
    if (b < 2) throw std::invalid_argument("generate_point_set: base must be >= 2");
    if (n < 1) throw std::invalid_argument("generate_point_set: n must be >= 1");
    if (pattern.size() != n)
        throw std::invalid_argument("generate_point_set: pattern length != n");

    PointSet ps;
    ps.b = b;
    ps.n = n;
    ps.pattern = pattern;
    ps.den = pow_i64(b, n);
    ps.xs.resize(ps.den);
    ps.ys.resize(ps.den);

    std::vector<std::int64_t> place(n);  // place[i] = b^(n-1-i)
    place[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) place[i] = place[i + 1] * b;

    std::vector<int> t(n, 0);  // t[i] is t_{i+1}
    for (std::int64_t rank = 0; rank < ps.den; ++rank) {
        std::int64_t xnum = 0, ynum = 0;
        for (int i = 0; i < n; ++i) {
            // x = t_n/b + ... + t_1/b^n, y = s_1(t_1)/b + ... + s_n(t_n)/b^n
            xnum += static_cast<std::int64_t>(t[i]) * place[n - 1 - i];
            ynum += static_cast<std::int64_t>(pattern.apply(i + 1, t[i], b)) * place[i];
        }
        ps.xs[rank] = xnum;
        ps.ys[rank] = ynum;
        for (int i = n - 1; i >= 0; --i) {  // next tuple, t_n fastest
            if (++t[i] < b) break;
            t[i] = 0;
        }
    }
    return ps;
}

// True iff every b-adic box at split (j1,j2) holds exactly b^(n-j1-j2)
// points; boxes are half-open, matching the net definition.
inline bool verify_net(const PointSet& ps, int j1, int j2) {
    if (j1 < 0 || j2 < 0 || j1 + j2 > ps.n)
        throw std::invalid_argument("verify_net: need j1, j2 >= 0 and j1 + j2 <= n");
    const std::int64_t bx = pow_i64(ps.b, j1);
    const std::int64_t by = pow_i64(ps.b, j2);
    const std::int64_t wx = pow_i64(ps.b, ps.n - j1);  // points per x-slab
    const std::int64_t wy = pow_i64(ps.b, ps.n - j2);
    std::vector<std::int64_t> count(bx * by, 0);
    for (std::int64_t i = 0; i < ps.size(); ++i)
        ++count[(ps.xs[i] / wx) * by + (ps.ys[i] / wy)];
    const std::int64_t expect = pow_i64(ps.b, ps.n - j1 - j2);
    for (std::int64_t c : count)
        if (c != expect) return false;
    return true;
}

inline void write_points_csv(const PointSet& ps, std::ostream& os) {
    os << "x_num,y_num,den\n";
    for (std::int64_t i = 0; i < ps.size(); ++i)
        os << ps.xs[i] << ',' << ps.ys[i] << ',' << ps.den << '\n';
}

}  // namespace badic
