#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "genop/polytope.hpp"

using namespace genop;
using R = Rational;

namespace {

template <class S>
bool contains_vertex(const PolytopeV<S>& p, const Vec<S>& v, const S& tol) {
    return std::any_of(p.vertices.begin(), p.vertices.end(),
                       [&](const Vec<S>& w) {
                           for (std::size_t i = 0; i < v.size(); ++i)
                               if (abs_val<S>(w[i] - v[i]) > tol) return false;
                           return true;
                       });
}

}  // namespace

TEST_CASE("vertex enumeration of the square") {
    PolytopeH<R> sq;
    sq.halfspaces = {{{R(1), R(0)}, R(1)},
                     {{R(-1), R(0)}, R(1)},
                     {{R(0), R(1)}, R(1)},
                     {{R(0), R(-1)}, R(1)}};
    auto v = vertex_enumerate(sq);
    REQUIRE(v.vertices.size() == 4);
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            CHECK(contains_vertex<R>(v, {R(sx), R(sy)}, R(0)));
}

TEST_CASE("vertex enumeration of the cross polytope in three dimensions") {
    PolytopeH<R> l1;
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                l1.halfspaces.push_back({{R(s0), R(s1), R(s2)}, R(1)});
    auto v = vertex_enumerate(l1);
    CHECK(v.vertices.size() == 6);
}

TEST_CASE("hull of the planar cross polytope") {
    std::vector<Vec<R>> cross = {
        {R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}, {R(0), R(-1)}};
    auto h = hull(cross);
    CHECK_FALSE(h.degenerate);
    CHECK(h.facets.halfspaces.size() == 4);
}

TEST_CASE("hull flags a degenerate point set") {
    auto h = hull(std::vector<Vec<R>>{{R(1), R(0)}, {R(-1), R(0)}});
    CHECK(h.degenerate);
    CHECK(h.affine_dim == 1);
}

TEST_CASE("cutting the square by a vertical halfspace") {
    PolytopeV<R> sqv;
    sqv.vertices = {{R(1), R(1)}, {R(1), R(-1)}, {R(-1), R(1)}, {R(-1), R(-1)}};
    auto c = cut(sqv, Halfspace<R>{{R(-1), R(0)}, R(-9, 10)});  // x >= 9/10
    REQUIRE(c.vertices.size() == 4);
    CHECK(contains_vertex<R>(c, {R(9, 10), R(1)}, R(0)));
    CHECK(contains_vertex<R>(c, {R(1), R(-1)}, R(0)));
}

TEST_CASE("cutting the cross polytope produces edge intersections") {
    PolytopeV<R> crossv;
    crossv.vertices = {{R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}, {R(0), R(-1)}};
    auto c = cut(crossv, Halfspace<R>{{R(-1), R(0)}, R(-9, 10)});
    REQUIRE(c.vertices.size() == 3);
    CHECK(contains_vertex<R>(c, {R(1), R(0)}, R(0)));
    CHECK(contains_vertex<R>(c, {R(9, 10), R(1, 10)}, R(0)));
    CHECK(contains_vertex<R>(c, {R(9, 10), R(-1, 10)}, R(0)));
}

TEST_CASE("a vacuous cut keeps everything, an empty cut keeps nothing") {
    PolytopeV<R> crossv;
    crossv.vertices = {{R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}, {R(0), R(-1)}};
    CHECK(cut(crossv, Halfspace<R>{{R(0), R(0)}, R(1)}).vertices.size() == 4);
    CHECK(cut(crossv, Halfspace<R>{{R(1), R(0)}, R(-2)}).vertices.empty());
}

TEST_CASE("hull of six symmetric points in three dimensions") {
    std::vector<Vec<R>> six;
    for (int s : {1, -1}) {
        six.push_back({R(s), R(s), R(s)});
        six.push_back({R(s), R(s), R(-s)});
        six.push_back({R(s), R(-s), R(s)});
    }
    auto h = hull(six);
    CHECK_FALSE(h.degenerate);
    CHECK(h.facets.halfspaces.size() == 8);
}

TEST_CASE("hexagon roundtrip through both representations, float") {
    std::vector<Vec<double>> hexv;
    for (int k = 0; k < 6; ++k)
        hexv.push_back({std::cos(k * M_PI / 3.0), std::sin(k * M_PI / 3.0)});
    auto h = hull(hexv);
    REQUIRE_FALSE(h.degenerate);
    auto v2 = vertex_enumerate(h.facets);
    CHECK(v2.vertices.size() == 6);
}

TEST_CASE("hull membership and separation") {
    std::vector<Vec<R>> cross = {
        {R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}, {R(0), R(-1)}};
    CHECK(in_convex_hull<R>({R(1, 2), R(1, 4)}, cross));
    CHECK_FALSE(in_convex_hull<R>({R(1), R(1)}, cross));
    auto [m_in, c_in] = separation_margin<R>({R(0), R(0)}, cross);
    CHECK(m_in <= R(0));
    auto [m_out, c_out] = separation_margin<R>({R(1), R(1)}, cross);
    CHECK(m_out > R(0));
    // the separating functional certifies the margin
    R best{0};
    for (const auto& p : cross) best = std::max(best, dot(c_out, p));
    CHECK(dot(c_out, Vec<R>{R(1), R(1)}) - best >= m_out);
}

TEST_CASE("irredundant points drop hull-interior entries") {
    std::vector<Vec<R>> pts = {{R(1), R(0)},  {R(-1), R(0)}, {R(0), R(1)},
                               {R(0), R(-1)}, {R(0), R(0)},  {R(1, 2), R(0)}};
    CHECK(irredundant_points(pts).size() == 4);
}

TEST_CASE("support maximization over both representations") {
    PolytopeV<R> crossv;
    crossv.vertices = {{R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}, {R(0), R(-1)}};
    CHECK(lp_max(Vec<R>{R(1), R(1)}, crossv).first == R(1));
    PolytopeH<R> sq;
    sq.halfspaces = {{{R(1), R(0)}, R(1)},
                     {{R(-1), R(0)}, R(1)},
                     {{R(0), R(1)}, R(1)},
                     {{R(0), R(-1)}, R(1)}};
    CHECK(lp_max(Vec<R>{R(1), R(1)}, sq).first == R(2));
}
