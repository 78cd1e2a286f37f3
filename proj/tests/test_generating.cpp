#include <catch2/catch_amalgamated.hpp>

#include "genop/generating.hpp"

using namespace genop;
using R = Rational;

namespace {

Operator<R> inclusion(std::size_t n) {
    Mat<R> m(n, Vec<R>(n, R(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = R(1);
    return make_operator(make_l1<R>(n), make_linf<R>(n), std::move(m));
}

}  // namespace

TEST_CASE("the inclusion attains at every extreme point") {
    auto c = is_generating(inclusion(3));
    CHECK(c.verdict == Verdict::Verified);
    CHECK(c.method == Method::VertexExact);
}

TEST_CASE("a deficient diagonal is refuted with a vertex witness") {
    auto d = make_operator(make_l1<R>(2), make_l1<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1, 2)}});
    auto c = is_generating(d);
    CHECK(c.verdict == Verdict::Refuted);
    REQUIRE(c.witness_vector);
    // the witness is a ball vertex whose image misses the sphere
    CHECK(norm(d.domain, *c.witness_vector) == R(1));
    CHECK(norm(d.codomain, genop::apply(d, *c.witness_vector)) < R(1));
}

TEST_CASE("the dual route agrees with the vertex route") {
    auto d = make_operator(make_l1<R>(2), make_l1<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1, 2)}});
    CHECK(dual_spear_check(inclusion(3)).verdict == Verdict::Verified);
    CHECK(dual_spear_check(inclusion(3)).method == Method::DualSpear);
    CHECK(dual_spear_check(d).verdict == Verdict::Refuted);
}

TEST_CASE("spear functionals are detected by the vertex criterion") {
    // on the sum-norm plane, (1,1) pairs to +-1 with every ball vertex
    CHECK(is_spear_vector(Vec<R>{R(1), R(1)}, make_l1<R>(2)).verdict ==
          Verdict::Verified);
    auto c = is_spear_vector(Vec<R>{R(1), R(0)}, make_l1<R>(2));
    CHECK(c.verdict == Verdict::Refuted);
    REQUIRE(c.witness_vector);
    // on the max-norm plane the coordinate functionals are spears
    CHECK(is_spear_vector(Vec<R>{R(1), R(0)}, make_linf<R>(2)).verdict ==
          Verdict::Verified);
    CHECK(is_spear_vector(Vec<R>{R(1, 2), R(1, 2)}, make_linf<R>(2)).verdict ==
          Verdict::Refuted);
    // candidates must be norm one in the dual
    CHECK_THROWS_AS(is_spear_vector(Vec<R>{R(1), R(1)}, make_linf<R>(2)),
                    not_norm_one);
}

TEST_CASE("rotund planes admit no spears") {
    CHECK(is_spear_vector(Vec<R>{R(1), R(0)}, make_l2<R>(2)).verdict ==
          Verdict::Refuted);
    CHECK(is_spear_set(std::vector<Vec<R>>{{R(1), R(0)}}, make_l2<R>(2))
              .verdict == Verdict::Refuted);
}

TEST_CASE("spear sets on the max-norm plane") {
    CHECK(is_spear_set(std::vector<Vec<R>>{{R(1), R(0)}}, make_linf<R>(2))
              .verdict == Verdict::Refuted);
    CHECK(is_spear_set(
              std::vector<Vec<R>>{{R(1), R(1)}, {R(-1), R(-1)}},
              make_linf<R>(2))
              .verdict == Verdict::Verified);
    CHECK_THROWS_AS(
        is_spear_set(std::vector<Vec<R>>{{R(2), R(0)}}, make_linf<R>(2)),
        norm_exceeds_one);
}

TEST_CASE("largest generated ball") {
    CHECK(generating_radius(inclusion(3)).radius == R(1));
    auto idinf = make_operator(make_linf<R>(2), make_linf<R>(2),
                               Mat<R>{{R(1), R(0)}, {R(0), R(1)}});
    CHECK(generating_radius(idinf).radius == R(1));
    // attainment stuck inside a hyperplane gives radius zero
    auto flat = make_operator(
        make_linf<R>(3), make_linf<R>(2),
        Mat<R>{{R(1, 3), R(1, 3), R(1, 3)}, {R(1, 3), R(1, 3), R(-1, 3)}});
    auto gr = generating_radius(flat);
    CHECK(gr.attaining.size() == 4);
    CHECK(gr.radius == R(0));
    CHECK(is_generating(flat).verdict == Verdict::Refuted);
    // averaged rows keeping full-dimensional attainment
    auto avg = make_operator(
        make_linf<R>(3), make_linf<R>(2),
        Mat<R>{{R(1, 2), R(1, 2), R(0)}, {R(1, 2), R(0), R(1, 2)}});
    auto ga = generating_radius(avg);
    CHECK(ga.attaining.size() == 6);
    CHECK(ga.radius == R(1, 3));
}

TEST_CASE("Euclidean domains reduce to isometry, float") {
    auto id2 = make_operator(make_l2<double>(2), make_l2<double>(2),
                             Mat<double>{{1, 0}, {0, 1}});
    CHECK(is_generating(id2).verdict == Verdict::Verified);
    CHECK(is_generating(id2).method == Method::EuclideanExact);
    CHECK(generating_radius(id2).radius == Catch::Approx(1.0));
    auto hil = make_operator(make_l2<double>(2), make_l2<double>(2),
                             Mat<double>{{1, 0}, {0, 0.5}});
    CHECK(is_generating(hil).verdict == Verdict::Refuted);
    CHECK(generating_radius(hil).radius == Catch::Approx(0.0));
    // an isometric line into the max-norm plane
    auto e1p = make_operator(make_l2<double>(1), make_linf<double>(2),
                             Mat<double>{{1}, {1}});
    CHECK(is_generating(e1p).verdict == Verdict::Verified);
    // the round ball inside the square: norm one but not isometric
    auto e2p = make_operator(make_l2<double>(2), make_linf<double>(2),
                             Mat<double>{{1, 0}, {0, 1}});
    CHECK(is_generating(e2p).verdict == Verdict::Refuted);
    CHECK(generating_radius(e2p).radius ==
          Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("convex splitting into generating terms") {
    auto d = make_operator(make_l1<R>(2), make_l1<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(1, 2)}});
    auto dec = decompose_into_generating(d);
    R sum{0};
    for (const auto& w : dec.weights) {
        CHECK(w > R(0));
        sum += w;
    }
    CHECK(sum == R(1));
    CHECK(dec.reconstruction_error == R(0));
    Mat<R> recon(2, Vec<R>(2, R(0)));
    for (std::size_t i = 0; i < dec.terms.size(); ++i)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                recon[r][c] += dec.weights[i] * dec.terms[i].matrix[r][c];
    CHECK(recon == d.matrix);
    for (const auto& t : dec.terms)
        CHECK(is_generating(t).verdict == Verdict::Verified);
}

TEST_CASE("splitting a scalar contraction") {
    auto t1 = make_operator(make_l1<R>(1), make_l1<R>(1), Mat<R>{{R(1, 2)}});
    auto dec = decompose_into_generating(t1);
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.weights[0] == R(3, 4));
    CHECK(dec.terms[0].matrix[0][0] == R(1));
    CHECK(dec.weights[1] == R(1, 4));
    CHECK(dec.terms[1].matrix[0][0] == R(-1));
    CHECK(dec.reconstruction_error == R(0));
}

TEST_CASE("splitting handles zero columns") {
    auto z = make_operator(make_l1<R>(2), make_l1<R>(2),
                           Mat<R>{{R(1), R(0)}, {R(0), R(0)}});
    auto dz = decompose_into_generating(z);
    CHECK(dz.terms.size() == 2);
    CHECK(dz.reconstruction_error == R(0));
    for (const auto& t : dz.terms)
        CHECK(is_generating(t).verdict == Verdict::Verified);
}
