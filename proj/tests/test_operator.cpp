#include <catch2/catch_amalgamated.hpp>

#include "genop/operator.hpp"

using namespace genop;
using R = Rational;

namespace {

Operator<R> inclusion2() {
    return make_operator(make_l1<R>(2), make_linf<R>(2),
                         Mat<R>{{R(1), R(0)}, {R(0), R(1)}});
}

}  // namespace

TEST_CASE("norm and attainment of the inclusion") {
    auto inc = inclusion2();
    auto n = operator_norm(inc);
    CHECK(n.value == R(1));
    CHECK(n.exact);
    auto rep = attainment(inc);
    CHECK(rep.operator_norm == R(1));
    CHECK(rep.vertices.size() == 4);  // every extreme point attains
}

TEST_CASE("adjoint flips spaces and preserves the norm") {
    auto adj = adjoint(inclusion2());
    CHECK(adj.domain.norm.kind == NormKind::L1);    // dual of the max norm
    CHECK(adj.codomain.norm.kind == NormKind::Linf);
    CHECK(operator_norm(adj).value == R(1));
    // adjoint norms agree for a rectangular example too
    auto t = make_operator(make_l1<R>(3), make_linf<R>(2),
                           Mat<R>{{R(1), R(-2), R(1, 2)},
                                  {R(0), R(1), R(-1)}});
    CHECK(operator_norm(adjoint(t)).value == operator_norm(t).value);
}

TEST_CASE("max norm example with a sign-splitting matrix") {
    auto t = make_operator(make_linf<R>(2), make_linf<R>(2),
                           Mat<R>{{R(1), R(1)}, {R(1), R(-1)}});
    auto n = operator_norm(t);
    CHECK(n.value == R(2));
    REQUIRE(n.maximizer);
    CHECK(norm(t.domain, *n.maximizer) == R(1));
    CHECK(norm(t.codomain, genop::apply(t, *n.maximizer)) == R(2));
}

TEST_CASE("averaging row attains everywhere") {
    auto avg = make_operator(make_linf<R>(2), make_linf<R>(2),
                             Mat<R>{{R(1), R(0)}, {R(1, 2), R(1, 2)}});
    CHECK(operator_norm(avg).value == R(1));
    CHECK(attainment(avg).vertices.size() == 4);
}

TEST_CASE("near-attainment regions grow with delta") {
    auto avg = make_operator(make_linf<R>(2), make_linf<R>(2),
                             Mat<R>{{R(1), R(0)}, {R(1, 2), R(1, 2)}});
    auto r0 = delta_attainment(avg, R(0));
    auto rh = delta_attainment(avg, R(1, 2));
    REQUIRE_FALSE(r0.pieces.empty());
    // every vertex of a zero-delta piece attains the norm exactly
    for (const auto& p : r0.pieces)
        for (const auto& v : p.vertices) {
            CHECK(norm(avg.domain, v) == R(1));
            CHECK(norm(avg.codomain, genop::apply(avg, v)) == R(1));
        }
    // wider delta keeps at least as many pieces, and vertices stay feasible
    std::size_t n0 = 0, nh = 0;
    for (const auto& p : r0.pieces) n0 += p.vertices.size();
    for (const auto& p : rh.pieces) nh += p.vertices.size();
    CHECK(nh >= n0);
    for (const auto& p : rh.pieces)
        for (const auto& v : p.vertices)
            CHECK(norm(avg.codomain, genop::apply(avg, v)) >= R(1, 2));
}

TEST_CASE("near-attainment requires a norm-one operator") {
    auto big = make_operator(make_l1<R>(2), make_linf<R>(2),
                             Mat<R>{{R(2), R(0)}, {R(0), R(2)}});
    CHECK_THROWS_AS(delta_attainment(big, R(0)), not_norm_one);
}

TEST_CASE("Euclidean operator norms, float") {
    auto e = make_operator(make_l2<double>(2), make_l2<double>(2),
                           Mat<double>{{3, 0}, {0, 4}});
    auto n = operator_norm(e);
    CHECK(n.value == Catch::Approx(4.0));
    REQUIRE(n.maximizer);
    CHECK(std::abs((*n.maximizer)[1]) == Catch::Approx(1.0));
    auto el = make_operator(make_l2<double>(2), make_linf<double>(2),
                            Mat<double>{{0.6, 0.8}, {1, 0}});
    CHECK(operator_norm(el).value == Catch::Approx(1.0));
}

TEST_CASE("sampled fallback for mixed spaces is labelled inexact") {
    auto mix = make_operator(make_l1_sum<double>({make_l2<double>(2)}),
                             make_linf<double>(2),
                             Mat<double>{{0.6, 0.8}, {1, 0}});
    auto n = operator_norm(mix);
    CHECK_FALSE(n.exact);
    CHECK(n.value > 0.95);
    CHECK(n.value < 1.0 + 1e-6);
}

TEST_CASE("normalize rescales to norm one") {
    auto t = make_operator(make_l1<R>(2), make_linf<R>(2),
                           Mat<R>{{R(3), R(0)}, {R(0), R(2)}});
    CHECK(operator_norm(normalize(t)).value == R(1));
    CHECK_THROWS_AS(require_norm_one(t), not_norm_one);
}

TEST_CASE("exact Euclidean norms are refused") {
    auto e = make_operator(make_l2<R>(2), make_l2<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1)}});
    CHECK_THROWS_AS(operator_norm(e), unsupported);
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(make_operator(make_l1<R>(2), make_linf<R>(2),
                                  Mat<R>{{R(1), R(0), R(0)},
                                         {R(0), R(1), R(0)}}),
                    dim_mismatch);
}
