#include "badic/checks.hpp"
#include "badic/cyclotomic.hpp"
#include "badic/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace badic;

TEST_CASE("cyclotomic polynomials by recursive division") {
    CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});        // x + 1
    CHECK(cyclotomic_poly(3) == std::vector<long long>{1, 1, 1});     // x^2 + x + 1
    CHECK(cyclotomic_poly(6) == std::vector<long long>{1, -1, 1});    // x^2 - x + 1
    CHECK(cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_poly(5) == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("zeta powers reduce to canonical form") {
    CHECK(zeta_pow(2, 1) == CycloValue(2, Rational(-1)));
    CHECK(zeta_pow(2, 2) == CycloValue::one(2));
    // zeta_3^2 = -1 - zeta_3
    CycloValue z32 = zeta_pow(3, 2);
    REQUIRE(z32.coeffs().size() == 2);
    CHECK(z32.coeffs()[0] == -1);
    CHECK(z32.coeffs()[1] == -1);
    CHECK(zeta_pow(5, 7) == zeta_pow(5, 2));
    CHECK(zeta_pow(5, -1) == zeta_pow(5, 4));
}

TEST_CASE("cyclotomic products") {
    // (zeta_3 - 1)(zeta_3^2 - 1) = 3
    CycloValue a = zeta_pow(3, 1) - CycloValue::one(3);
    CycloValue b = zeta_pow(3, 2) - CycloValue::one(3);
    CHECK(a * b == CycloValue(3, Rational(3)));

    // multiplying by one is the identity
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int base : {2, 3, 4, 5, 7}) {
        CycloValue x(base);
        for (int k = 0; k < x.degree(); ++k) x += Rational(coef(rng), 1 + (k % 3)) * zeta_pow(base, k);
        CHECK(x * CycloValue::one(base) == x);
    }

    // (zeta_2 - 1)^2 = 4
    CycloValue c = zeta_pow(2, 1) - CycloValue::one(2);
    CHECK(c * c == CycloValue(2, Rational(4)));

    CHECK_THROWS_AS(zeta_pow(2, 1) * zeta_pow(3, 1), std::invalid_argument);
}

TEST_CASE("complex projection") {
    CHECK(to_complex(zeta_pow(2, 1)) == ComplexF(-1.0, 0.0));
    CHECK(std::abs(to_complex(zeta_pow(4, 1)) - ComplexF(0.0, 1.0)) < 1e-15);
    const ComplexF w = to_complex(zeta_pow(3, 1) - CycloValue::one(3));
    CHECK(std::abs(w - ComplexF(-1.5, 0.86602540378443865)) < 1e-12);
}

TEST_CASE("product over l of (1 - zeta^l) equals b") {
    for (int b = 2; b <= 12; ++b) {
        CycloValue prod = CycloValue::one(b);
        for (int l = 1; l < b; ++l) prod = prod * (CycloValue::one(b) - zeta_pow(b, l));
        CHECK(prod == CycloValue(b, Rational(b)));
    }
}

TEST_CASE("exact inverses of zeta^l - 1") {
    for (int b = 2; b <= 12; ++b)
        for (int l = 1; l < b; ++l)
            CHECK(inv_zeta_m1(b, l) * (zeta_pow(b, l) - CycloValue::one(b)) == CycloValue::one(b));
    CHECK_THROWS_AS(inv_zeta_m1(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(inv_zeta_m1(4, 4), std::invalid_argument);
}

TEST_CASE("conjugation and rational |x|^2") {
    CHECK(conj(zeta_pow(5, 2)) == zeta_pow(5, 3));
    CHECK(abs2_rational(zeta_pow(3, 1) - CycloValue::one(3)) == 3);
    CHECK(abs2_rational(CycloValue(2, Rational(-1) / 2)) == Rational(1) / 4);
    // |a + b zeta_3|^2 = a^2 - ab + b^2
    CycloValue v = CycloValue(3, Rational(2)) + Rational(5) * zeta_pow(3, 1);
    CHECK(abs2_rational(v) == 4 - 10 + 25);
}

TEST_CASE("random products agree with their float projections") {
    auto res = checks::cyclo_arithmetic(1000, 987654);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(format_rational(parse_rational("91/576")) == "91/576");
    CHECK(format_rational(parse_rational("-3/6")) == "-1/2");
    CHECK(format_rational(parse_rational("7")) == "7/1");
    CHECK(format_rational(Rational(0)) == "0/1");
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(to_double(parse_rational("1/4")) == 0.25);
}
