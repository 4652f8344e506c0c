#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "asph4/curves.hpp"

using namespace asph4::curves;
using asph4::mcg::HomologyClass;
using asph4::mcg::symplectic_pairing;

TEST_CASE("lantern system golden intersections") {
    const auto cs = lantern_curve_system();
    CHECK(cs.count() == 7);
    CHECK(cs.geom(6, 7) == 2);
    CHECK(cs.alg(6, 7) == 0);
    CHECK(cs.geom(5, 6) == 2);
    CHECK(cs.geom(5, 7) == 2);
    CHECK(cs.geom(1, 5) == 0);
    CHECK(cs.geom(1, 2) == 0);
    CHECK(cs.geom(4, 7) == 0);
}

TEST_CASE("lantern homology classes") {
    const auto cs = lantern_curve_system();
    const auto a1 = HomologyClass::a(1, 3), a2 = HomologyClass::a(2, 3), a3 = HomologyClass::a(3, 3);
    CHECK(cs.h1(1) == a1);
    CHECK(cs.h1(2) == a2);
    CHECK(cs.h1(3) == a3);
    CHECK(cs.h1(4) == a1 + a2 + a3);
    CHECK(cs.h1(5) == a1 + a2);
    CHECK(cs.h1(6) == a2 + a3);
    CHECK(cs.h1(7) == a1 + a3);
}

TEST_CASE("algebraic table equals the symplectic pairing") {
    const auto cs = lantern_curve_system();
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            CHECK(asph4::Int(cs.alg(i, j)) == symplectic_pairing(cs.h1(i), cs.h1(j)));
}

TEST_CASE("composite_fixes_support on the lantern configuration") {
    const auto cs = lantern_curve_system();
    CHECK(composite_fixes_support({1}, 2, cs));
    CHECK(composite_fixes_support({1, 2, 3, 4}, 5, cs));
    CHECK(!composite_fixes_support({6}, 7, cs));
    CHECK(!composite_fixes_support({5, 6}, 7, cs));
    CHECK(composite_fixes_support({}, 7, cs));
}

TEST_CASE("composite_fixes_support rejects bad indices") {
    const auto cs = lantern_curve_system();
    CHECK_THROWS_AS(composite_fixes_support({0}, 2, cs), std::invalid_argument);
    CHECK_THROWS_AS(composite_fixes_support({1}, 8, cs), std::invalid_argument);
}

TEST_CASE("composite_fixes_support is monotone in the prefix") {
    const auto cs = lantern_curve_system();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> prefix;
        const int len = pick(rng) % 5;
        for (int i = 0; i < len; ++i) prefix.push_back(pick(rng));
        const int target = pick(rng);
        const bool before = composite_fixes_support(prefix, target, cs);
        prefix.push_back(pick(rng));
        const bool after = composite_fixes_support(prefix, target, cs);
        if (!before) CHECK(!after);
    }
}

TEST_CASE("constructor validates its invariants") {
    auto names = std::vector<std::string>{"A", "B"};
    auto h1 = std::vector<HomologyClass>{HomologyClass::a(1, 3), HomologyClass::b(1, 3)};
    // alg says 0 but the pairing is 1
    std::vector<std::vector<long long>> geom = {{0, 1}, {1, 0}};
    std::vector<std::vector<long long>> alg = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(CurveSystem(names, h1, geom, alg), std::invalid_argument);

    // |alg| must not exceed geom
    std::vector<std::vector<long long>> geom0 = {{0, 0}, {0, 0}};
    std::vector<std::vector<long long>> alg1 = {{0, 1}, {-1, 0}};
    CHECK_THROWS_AS(CurveSystem(names, h1, geom0, alg1), std::invalid_argument);

    // consistent data passes
    std::vector<std::vector<long long>> geom1 = {{0, 1}, {1, 0}};
    CHECK_NOTHROW(CurveSystem(names, h1, geom1, alg1));
}
