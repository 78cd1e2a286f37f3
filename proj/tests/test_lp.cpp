#include <catch2/catch_amalgamated.hpp>

#include "genop/lp.hpp"

using namespace genop;

TEST_CASE("square feasible region, float") {
    Mat<double> a = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Vec<double> b = {1, 1, 1, 1};
    Vec<double> c = {1, 1};
    auto r = lp_solve(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Catch::Approx(2.0));
    CHECK(r.x[0] == Catch::Approx(1.0));
    CHECK(r.x[1] == Catch::Approx(1.0));
}

TEST_CASE("infeasible system is detected") {
    Mat<Rational> a = {{Rational(1)}, {Rational(-1)}};
    Vec<Rational> b = {Rational(0), Rational(-1)};
    Vec<Rational> c = {Rational(0)};
    CHECK(lp_solve(a, b, c).status == LpStatus::Infeasible);
}

TEST_CASE("exact rational optimum") {
    Mat<Rational> a = {{Rational(1)}, {Rational(-1)}};
    Vec<Rational> b = {Rational(1, 3), Rational(5)};
    Vec<Rational> c = {Rational(1)};
    auto r = lp_solve(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(1, 3));
    CHECK(r.x[0] == Rational(1, 3));
}

TEST_CASE("unbounded direction is detected") {
    Mat<double> a = {{-1.0}};
    Vec<double> b = {0.0};
    Vec<double> c = {1.0};
    CHECK(lp_solve(a, b, c).status == LpStatus::Unbounded);
}

TEST_CASE("cross polytope support in a coordinate direction") {
    Mat<Rational> a = {{Rational(1), Rational(1)},
                       {Rational(1), Rational(-1)},
                       {Rational(-1), Rational(1)},
                       {Rational(-1), Rational(-1)}};
    Vec<Rational> b(4, Rational(1));
    Vec<Rational> c = {Rational(1), Rational(0)};
    auto r = lp_solve(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(1));
    CHECK(r.x[0] == Rational(1));
    CHECK(r.x[1] == Rational(0));
}

TEST_CASE("equality pairs pin a coordinate") {
    // z on the segment x = 0 (two opposite inequalities), minimize -y with
    // |y| <= 2: phase-one artificials must not survive into phase two
    Mat<Rational> a = {{Rational(1), Rational(0)},
                       {Rational(-1), Rational(0)},
                       {Rational(0), Rational(1)},
                       {Rational(0), Rational(-1)}};
    Vec<Rational> b = {Rational(0), Rational(0), Rational(2), Rational(2)};
    Vec<Rational> c = {Rational(0), Rational(1)};
    auto r = lp_solve(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(2));
    CHECK(r.x[0] == Rational(0));
    CHECK(r.x[1] == Rational(2));
}

TEST_CASE("negative right-hand sides need phase one") {
    // x >= 1, x <= 3, maximize -x: optimum at x = 1
    Mat<Rational> a = {{Rational(-1)}, {Rational(1)}};
    Vec<Rational> b = {Rational(-1), Rational(3)};
    Vec<Rational> c = {Rational(-1)};
    auto r = lp_solve(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(-1));
    CHECK(r.x[0] == Rational(1));
}
