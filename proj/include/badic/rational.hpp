#pragma once

// Exact rational scalars. Everything exact in this library (point
// coordinates, box volumes, digit sums, Haar coefficient coordinates)
// is a Rational; floats only appear after an explicit projection.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace badic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

// b^e for integer b >= 2, e >= 0.
inline BigInt pow_big(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_big: negative exponent");
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// b^e as a Rational, e may be negative.
inline Rational pow_rational(std::int64_t base, int exp) {
    if (exp >= 0) return Rational(pow_big(base, exp));
    return Rational(1) / Rational(pow_big(base, -exp));
}

// b^e in 64 bits; throws if it does not fit.
inline std::int64_t pow_i64(std::int64_t base, int exp) {
    BigInt v = pow_big(base, exp);
    if (v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("pow_i64: b^e exceeds 64 bits");
    return v.convert_to<std::int64_t>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical "num/den" form, denominator always present and positive.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

}  // namespace badic
