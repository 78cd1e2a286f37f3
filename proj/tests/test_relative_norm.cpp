#include <catch2/catch_amalgamated.hpp>

#include "genop/relative_norm.hpp"

using namespace genop;
using R = Rational;

namespace {

Operator<R> g_diag() {
    return make_operator(make_l1<R>(2), make_l1<R>(2),
                         Mat<R>{{R(1), R(0)}, {R(0), R(1, 2)}});
}

Operator<R> t_corner() {
    // e2* (x) e2
    return make_operator(make_l1<R>(2), make_l1<R>(2),
                         Mat<R>{{R(0), R(0)}, {R(0), R(1)}});
}

}  // namespace

TEST_CASE("relative to a generating operator nothing is lost") {
    auto g = make_operator(make_l1<R>(2), make_linf<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1)}});
    auto t = make_operator(make_l1<R>(2), make_linf<R>(2),
                           Mat<R>{{R(1, 2), R(-1)}, {R(1), R(1, 3)}});
    CHECK(relative_norm(t, g) == operator_norm(t).value);
}

TEST_CASE("relative norm of a corner operator collapses") {
    auto g = g_diag();
    auto t = t_corner();
    CHECK(operator_norm(t).value == R(1));
    CHECK(relative_norm_delta(t, g, R(1, 4)) == R(1, 2));
    CHECK(relative_norm(t, g) == R(0));
}

TEST_CASE("dyadic sweep marches down to the limit") {
    auto g = g_diag();
    auto t = t_corner();
    auto sweep = relative_norm_sweep(t, g, dyadic_deltas<R>(8));
    REQUIRE(sweep.size() == 8);
    for (std::size_t k = 0; k < sweep.size(); ++k) {
        CHECK(sweep[k].first == R(1, 1 << (k + 1)));
        // on this pair the value is exactly twice the width
        CHECK(sweep[k].second == R(2) * sweep[k].first);
        if (k) CHECK(sweep[k].second <= sweep[k - 1].second);
    }
}

TEST_CASE("aligned numerical radius sits below the relative norm") {
    auto g = g_diag();
    auto t = t_corner();
    CHECK(numerical_radius(t, g) == R(0));
    CHECK(numerical_radius_delta(t, g, R(0)) == R(0));
    CHECK(numerical_radius(t, g) <= relative_norm(t, g));
    // with a transfer that does act on the attaining vertex
    auto s = make_operator(make_l1<R>(2), make_l1<R>(2),
                           Mat<R>{{R(1, 3), R(0)}, {R(0), R(1)}});
    CHECK(numerical_radius(s, g) == R(1, 3));
    CHECK(relative_norm(s, g) == R(1, 3));
}

TEST_CASE("full report") {
    auto rep = report(t_corner(), g_diag(), 5);
    CHECK(rep.t_norm == R(1));
    CHECK(rep.t_rel == R(0));
    CHECK(rep.v_g == R(0));
    CHECK(rep.delta_sweep.size() == 5);
}

TEST_CASE("rank-one witness for a non-generating operator") {
    auto g = g_diag();
    auto w = rank_one_defect_witness(g);
    REQUIRE(w);
    CHECK(w->gap == R(1));
    CHECK(norm(dual(g.domain), w->functional) == R(1));
    CHECK(dot(w->functional, w->missed) == R(1));
    // the witness rank-one operator has full norm but small relative norm
    auto ro = rank_one(w->functional, Vec<R>{R(1), R(0)}, g.domain,
                       g.codomain);
    CHECK(operator_norm(ro).value == R(1));
    CHECK(relative_norm(ro, g) <= R(1) - w->gap);
}

TEST_CASE("generating operators admit no defect witness") {
    auto g = make_operator(make_l1<R>(2), make_linf<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1)}});
    CHECK_FALSE(rank_one_defect_witness(g));
}

TEST_CASE("mismatched shapes are rejected") {
    auto g = g_diag();
    auto t = make_operator(make_l1<R>(3), make_l1<R>(2),
                           Mat<R>{{R(1), R(0), R(0)}, {R(0), R(1), R(0)}});
    CHECK_THROWS_AS(relative_norm(t, g), dim_mismatch);
    CHECK_THROWS_AS(numerical_radius(t, g), dim_mismatch);
}
