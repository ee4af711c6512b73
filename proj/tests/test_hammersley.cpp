#include "badic/checks.hpp"
#include "badic/hammersley.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace badic;

TEST_CASE("pattern parsing, a_count, canonical patterns") {
    SignPattern p = SignPattern::from_string("IIR");
    CHECK(p.size() == 3);
    CHECK(a_count(p) == 2);
    CHECK(p.to_string() == "IIR");
    CHECK(a_count(SignPattern::from_string("R")) == 0);
    CHECK_THROWS_AS(SignPattern::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::from_string("IXR"), std::invalid_argument);

    CHECK(balanced_pattern(4).to_string() == "IIRR");
    CHECK(balanced_pattern(1).to_string() == "R");
    CHECK(a_count(balanced_pattern(5)) == 2);
    CHECK(std::abs(2 * a_count(balanced_pattern(5)) - 5) == 1);
    CHECK(all_identity_pattern(3).to_string() == "III");
}

TEST_CASE("point sets match the defining formula") {
    // b=2, n=1, identity: {(0,0), (1/2,1/2)}
    PointSet p1 = generate_point_set(2, 1, SignPattern::from_string("I"));
    REQUIRE(p1.size() == 2);
    CHECK(p1.x(0) == 0);
    CHECK(p1.y(0) == 0);
    CHECK(p1.x(1) == Rational(1) / 2);
    CHECK(p1.y(1) == Rational(1) / 2);

    // b=2, n=1, reversal: {(0,1/2), (1/2,0)}
    PointSet p2 = generate_point_set(2, 1, SignPattern::from_string("R"));
    CHECK(p2.x(0) == 0);
    CHECK(p2.y(0) == Rational(1) / 2);
    CHECK(p2.x(1) == Rational(1) / 2);
    CHECK(p2.y(1) == 0);

    // b=2, n=2, identities, lexicographic in (t_1, t_2)
    PointSet p3 = generate_point_set(2, 2, SignPattern::from_string("II"));
    REQUIRE(p3.size() == 4);
    const std::vector<std::pair<std::int64_t, std::int64_t>> want = {{0, 0}, {2, 1}, {1, 2}, {3, 3}};
    for (int i = 0; i < 4; ++i) {
        CHECK(p3.xs[i] == want[i].first);
        CHECK(p3.ys[i] == want[i].second);
    }
}

TEST_CASE("generation validates its inputs") {
    CHECK_THROWS_AS(generate_point_set(1, 2, SignPattern::from_string("II")), std::invalid_argument);
    CHECK_THROWS_AS(generate_point_set(2, 0, SignPattern::from_string("I")), std::invalid_argument);
    CHECK_THROWS_AS(generate_point_set(2, 3, SignPattern::from_string("II")), std::invalid_argument);
}

TEST_CASE("coordinates are permutations of 0..b^n-1 and generation is deterministic") {
    std::mt19937_64 rng(42);
    for (int b : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) {
            SignPattern pat = random_pattern(n, rng);
            PointSet ps = generate_point_set(b, n, pat);
            auto xs = ps.xs, ys = ps.ys;
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            for (std::int64_t k = 0; k < ps.size(); ++k) {
                CHECK(xs[k] == k);
                CHECK(ys[k] == k);
            }
            PointSet again = generate_point_set(b, n, pat);
            CHECK(again.xs == ps.xs);
            CHECK(again.ys == ps.ys);
        }
}

TEST_CASE("net property on named examples") {
    CHECK(verify_net(generate_point_set(2, 2, SignPattern::from_string("II")), 1, 1));
    for (auto pat : {"II", "IR", "RI", "RR"})
        CHECK(verify_net(generate_point_set(2, 2, SignPattern::from_string(pat)), 2, 0));
    CHECK(verify_net(generate_point_set(3, 2, SignPattern::from_string("RI")), 1, 1));
    CHECK_THROWS_AS(verify_net(generate_point_set(2, 2, SignPattern::from_string("II")), 2, 1),
                    std::invalid_argument);
}

TEST_CASE("net property over random patterns") {
    auto res = checks::net_property({2, 3}, 4, 5, 777);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("point CSV dump") {
    std::ostringstream os;
    write_points_csv(generate_point_set(2, 1, SignPattern::from_string("I")), os);
    CHECK(os.str() == "x_num,y_num,den\n0,0,2\n1,1,2\n");
}
