#ifndef GENOP_GENERATING_HPP
#define GENOP_GENERATING_HPP

#include <string>
#include <utility>
#include <vector>

#include "genop/certificate.hpp"
#include "genop/errors.hpp"
#include "genop/lp.hpp"
#include "genop/operator.hpp"
#include "genop/space.hpp"

namespace genop {

namespace detail {

// min over z in one unit-ball facet of max_{w in wlist} ||z + w||, as an LP
// in (z, t). Returns (min value, argmin z).
template <class S>
std::pair<S, Vec<S>> facet_min_max_shift(
    const std::vector<Vec<S>>& dual_ext, const Vec<S>& facet_normal,
    const std::vector<Vec<S>>& wlist) {
    std::size_t d = facet_normal.size();
    Mat<S> a;
    Vec<S> b;
    auto row = [&](const Vec<S>& zc, const S& tc, const S& rhs) {
        Vec<S> r = zc;
        r.push_back(tc);
        a.push_back(std::move(r));
        b.push_back(rhs);
    };
    for (const auto& phi : dual_ext) row(phi, S{0}, S{1});  // z in the ball
    row(neg(facet_normal), S{0}, S{-1});                    // z on the facet
    for (const auto& w : wlist)
        for (const auto& phi : dual_ext)
            row(phi, S{-1}, -dot(phi, w));  // <phi, z + w> <= t
    Vec<S> c(d + 1, S{0});
    c[d] = S{-1};  // minimize t
    LpResult<S> r = lp_solve(a, b, c);
    if (r.status != LpStatus::Optimal)
        throw bad_input("degenerate spear subproblem");
    Vec<S> z(r.x.begin(), r.x.begin() + d);
    return {-r.value, std::move(z)};
}

}  // namespace detail

// F is a spear set of Z when every z0 on the unit sphere admits a sign and
// an element z of F with ||z + theta z0|| = 2. The sphere is swept facet by
// facet; each facet contributes one LP.
template <class S>
Certificate<S> is_spear_set(const std::vector<Vec<S>>& f, const Space<S>& z,
                            const S& tol = scalar_traits<S>::default_tol()) {
    if (f.empty()) throw bad_input("empty candidate spear set");
    Certificate<S> cert;
    cert.tolerance = tol;
    if (is_euclidean(z) && z.dim >= 2) {
        // strict convexity: ||z0 + w|| = 2 with both norm one forces w = z0,
        // so no finite set works
        cert.verdict = Verdict::Refuted;
        cert.method = Method::VertexExact;
        cert.detail = "strictly convex space admits no finite spear set";
        return cert;
    }
    auto du = extreme_points(dual(z));
    if (!du) throw not_polyhedral("is_spear_set");
    std::vector<Vec<S>> wlist;
    for (const auto& w : f) {
        if (norm(z, w) > S{1} + tol)
            throw norm_exceeds_one("spear set element");
        wlist.push_back(w);
        wlist.push_back(neg(w));
    }
    cert.method = Method::VertexExact;
    for (const auto& facet : ball_facets(z)) {
        auto [val, z0] = detail::facet_min_max_shift(*du, facet.normal, wlist);
        if (val < S{2} - tol) {
            cert.verdict = Verdict::Refuted;
            cert.witness_vector = z0;
            cert.detail = "max ||z + w|| over the set is " +
                          scalar_traits<S>::to_string(val) +
                          " at the witness point";
            return cert;
        }
    }
    cert.verdict = Verdict::Verified;
    cert.detail = "every unit-ball facet meets the doubling condition";
    return cert;
}

// Is xstar a spear vector of the dual of s? For polyhedral s this reduces
// to |<xstar, v>| = 1 at every extreme point v of the ball of s. A
// Euclidean s has a strictly convex dual, which carries no spear vectors.
template <class S>
Certificate<S> is_spear_vector(const Vec<S>& xstar, const Space<S>& s,
                               const S& tol =
                                   scalar_traits<S>::default_tol()) {
    Certificate<S> cert;
    cert.tolerance = tol;
    cert.method = Method::VertexExact;
    if (is_euclidean(s) && s.dim >= 2) {
        cert.verdict = Verdict::Refuted;
        cert.witness_vector = xstar;
        cert.detail = "strictly convex dual has no spear vectors";
        return cert;
    }
    auto ext = extreme_points(s);
    if (!ext) throw not_polyhedral("is_spear_vector");
    if (abs_val<S>(norm(dual(s), xstar) - S{1}) > tol)
        throw not_norm_one("spear candidate");
    for (const auto& v : *ext) {
        if (abs_val<S>(abs_val<S>(dot(xstar, v)) - S{1}) > tol) {
            cert.verdict = Verdict::Refuted;
            cert.witness_vector = v;
            cert.detail = "|<x*, v>| = " +
                          scalar_traits<S>::to_string(
                              abs_val<S>(dot(xstar, v))) +
                          " at an extreme point";
            return cert;
        }
    }
    cert.verdict = Verdict::Verified;
    cert.detail = "|<x*, v>| = 1 at every extreme point of the ball";
    return cert;
}

// G is generating iff {G* u : u extreme in the dual codomain ball} is a
// spear set of the dual domain.
template <class S>
Certificate<S> dual_spear_check(const Operator<S>& g,
                                const S& tol =
                                    scalar_traits<S>::default_tol()) {
    auto du = extreme_points(dual(g.codomain));
    if (!du || !is_polyhedral(g.domain)) throw not_polyhedral("dual_spear_check");
    require_norm_one(g, tol);
    Mat<S> gt = transpose(g.matrix);
    std::vector<Vec<S>> f;
    for (const auto& u : *du) f.push_back(matvec(gt, u));
    Certificate<S> cert = is_spear_set(f, dual(g.domain), tol);
    cert.method = Method::DualSpear;
    return cert;
}

namespace detail {

template <class S>
bool is_identity(const Mat<S>& m, const S& tol) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            S want = i == j ? S{1} : S{0};
            if (abs_val<S>(m[i][j] - want) > tol) return false;
        }
    return true;
}

// {x : ||Gx||_Y <= 1} for polyhedral Y, as vertices
template <class S>
std::vector<Vec<S>> preimage_ball_vertices(const Operator<S>& g, const S& tol) {
    auto du = extreme_points(dual(g.codomain));
    Mat<S> gt = transpose(g.matrix);
    std::vector<Halfspace<S>> hs;
    for (const auto& u : *du) hs.push_back({matvec(gt, u), S{1}});
    return vertex_enumerate(PolytopeH<S>{std::move(hs)}, tol).vertices;
}

}  // namespace detail

// Does G (norm one) attain its norm at every extreme point of the unit ball?
template <class S>
Certificate<S> is_generating(const Operator<S>& g,
                             const S& tol =
                                 scalar_traits<S>::default_tol()) {
    Certificate<S> cert;
    cert.tolerance = tol;
    if (auto ext = extreme_points(g.domain)) {
        require_norm_one(g, tol);
        cert.method = Method::VertexExact;
        for (const auto& v : *ext) {
            S val = norm(g.codomain, genop::apply(g, v));
            if (val < S{1} - tol) {
                cert.verdict = Verdict::Refuted;
                cert.witness_vector = v;
                cert.detail = "||Gv|| = " + scalar_traits<S>::to_string(val) +
                              " < 1 at an extreme point of the ball";
                return cert;
            }
        }
        cert.verdict = Verdict::Verified;
        cert.detail = "norm attained at all " +
                      std::to_string(ext->size()) + " ball vertices";
        return cert;
    }
    if (is_euclidean(g.domain)) {
        cert.method = Method::EuclideanExact;
        if (is_euclidean(g.codomain)) {
            // every unit vector is extreme, so generating means isometric:
            // G^T G = I
            Mat<S> gram = matmul(transpose(g.matrix), g.matrix);
            S gtol = scalar_traits<S>::exact ? S{0} : tol;
            if (detail::is_identity(gram, gtol)) {
                cert.verdict = Verdict::Verified;
                cert.detail = "G^T G = I, an isometric embedding";
            } else {
                cert.verdict = Verdict::Refuted;
                std::size_t bi = 0, bj = 0;
                S dev{0};
                for (std::size_t i = 0; i < gram.size(); ++i)
                    for (std::size_t j = 0; j < gram[i].size(); ++j) {
                        S want = i == j ? S{1} : S{0};
                        if (abs_val<S>(gram[i][j] - want) > dev) {
                            dev = abs_val<S>(gram[i][j] - want);
                            bi = i;
                            bj = j;
                        }
                    }
                cert.witness_vector =
                    bi == bj ? unit_vec<S>(g.domain.dim, bi)
                             : add(unit_vec<S>(g.domain.dim, bi),
                                   unit_vec<S>(g.domain.dim, bj));
                cert.detail = "G^T G deviates from I by " +
                              scalar_traits<S>::to_string(dev) +
                              "; norm is not attained along the witness "
                              "direction";
            }
            return cert;
        }
        if (is_polyhedral(g.codomain)) {
            // isometric embedding test done exactly on squared lengths:
            // columns of G* over extreme dual functionals must have sup
            // Euclidean length one, and every vertex of the preimage ball
            // {x : ||Gx|| <= 1} must have Euclidean length one
            auto du = extreme_points(dual(g.codomain));
            Mat<S> gt = transpose(g.matrix);
            S best{0};
            for (const auto& u : *du)
                best = std::max(best, euclidean_norm_sq(matvec(gt, u)));
            S ntol = scalar_traits<S>::exact ? S{0} : tol;
            if (abs_val<S>(best - S{1}) > ntol)
                throw not_norm_one("squared norm " +
                                   scalar_traits<S>::to_string(best));
            for (const auto& x :
                 detail::preimage_ball_vertices(g, tol)) {
                S len = euclidean_norm_sq(x);
                if (abs_val<S>(len - S{1}) > ntol) {
                    cert.verdict = Verdict::Refuted;
                    cert.witness_vector = x;
                    cert.detail =
                        "preimage-ball vertex with squared Euclidean "
                        "length " +
                        scalar_traits<S>::to_string(len) +
                        "; the norm is not attained along it";
                    return cert;
                }
            }
            cert.verdict = Verdict::Verified;
            cert.detail = "isometric embedding of a Euclidean space";
            return cert;
        }
    }
    throw unsupported(
        "no exact generating test for this space pair; use the sampled "
        "oracle");
}

template <class S>
struct GeneratingRadius {
    S radius{0};
    std::vector<Vec<S>> attaining;  // extreme points where ||Gx|| = 1
};

// Largest r with r B_X inside conv(att(G)); 0 when the attainment set is
// too thin.
template <class S>
GeneratingRadius<S> generating_radius(const Operator<S>& g,
                                      const S& tol =
                                          scalar_traits<S>::default_tol()) {
    GeneratingRadius<S> out;
    if (auto ext = extreme_points(g.domain)) {
        require_norm_one(g, tol);
        for (const auto& v : *ext)
            if (norm(g.codomain, genop::apply(g, v)) >= S{1} - tol)
                out.attaining.push_back(v);
        if (!out.attaining.empty())
            out.radius = contained_ball_radius(
                g.domain, PolytopeV<S>{out.attaining}, tol);
        return out;
    }
    if (is_euclidean(g.domain)) {
        if (is_euclidean(g.codomain)) {
            // attainment set is the unit sphere of the fixed space of G^T G
            Mat<S> gram = matmul(transpose(g.matrix), g.matrix);
            S gtol = scalar_traits<S>::exact ? S{0} : tol;
            out.radius = detail::is_identity(gram, gtol) ? S{1} : S{0};
            return out;
        }
        if (is_polyhedral(g.codomain)) {
            // ||Gx|| = max_u <G* u, x> with each ||G* u||_2 <= 1; equality
            // at a unit vector x forces x = G* u of length one
            auto du = extreme_points(dual(g.codomain));
            Mat<S> gt = transpose(g.matrix);
            S ntol = scalar_traits<S>::exact ? S{0} : tol;
            for (const auto& u : *du) {
                Vec<S> a = matvec(gt, u);
                if (abs_val<S>(euclidean_norm_sq(a) - S{1}) <= ntol)
                    out.attaining.push_back(a);
            }
            if (!out.attaining.empty())
                out.radius = contained_ball_radius(
                    g.domain, PolytopeV<S>{out.attaining}, tol);
            return out;
        }
    }
    throw not_polyhedral("generating_radius");
}

template <class S>
struct ConvexDecomposition {
    std::vector<S> weights;          // positive, sums to one
    std::vector<Operator<S>> terms;  // generating operators
    S reconstruction_error{0};       // max entry deviation of the recombination
};

namespace detail {

// e1 rescaled to norm one, used to split zero columns deterministically
template <class S>
Vec<S> some_unit_vector(const Space<S>& s) {
    Vec<S> e = unit_vec<S>(s.dim, 0);
    return scale(S{1} / norm(s, e), e);
}

}  // namespace detail

// Writes T with l1 domain and ||T|| <= 1 as a convex combination of
// operators all of whose columns have norm one; such operators are
// generating. One non-unit column is split per level, so the expansion has
// at most 2^k terms for k deficient columns.
template <class S>
ConvexDecomposition<S> decompose_into_generating(
    const Operator<S>& t, const S& tol = scalar_traits<S>::default_tol()) {
    if (t.domain.norm.kind != NormKind::L1)
        throw unsupported("decomposition needs an l1 domain");
    Mat<S> cols = transpose(t.matrix);
    for (const auto& c : cols)
        if (norm(t.codomain, c) > S{1} + tol)
            throw norm_exceeds_one("column norm " +
                                   scalar_traits<S>::to_string(
                                       norm(t.codomain, c)));
    ConvexDecomposition<S> out;
    std::vector<std::pair<S, Mat<S>>> stack{{S{1}, cols}};
    while (!stack.empty()) {
        auto [w, m] = std::move(stack.back());
        stack.pop_back();
        std::size_t k = m.size();
        for (std::size_t j = 0; j < m.size(); ++j)
            if (norm(t.codomain, m[j]) < S{1} - tol) {
                k = j;
                break;
            }
        if (k == m.size()) {
            out.weights.push_back(w);
            out.terms.push_back(
                make_operator(t.domain, t.codomain, transpose(m)));
            continue;
        }
        S alpha = norm(t.codomain, m[k]);
        Vec<S> plus, minus;
        if (alpha > tol) {
            plus = scale(S{1} / alpha, m[k]);
            minus = neg(plus);
        } else {
            alpha = S{0};
            plus = detail::some_unit_vector(t.codomain);
            minus = neg(plus);
        }
        S two{2};
        Mat<S> mp = m, mm = m;
        mp[k] = plus;
        mm[k] = minus;
        // minus below plus: the positive branch is emitted first
        stack.push_back({w * (S{1} - alpha) / two, std::move(mm)});
        stack.push_back({w * (S{1} + alpha) / two, std::move(mp)});
    }
    Mat<S> recon(t.codomain.dim, Vec<S>(t.domain.dim, S{0}));
    for (std::size_t i = 0; i < out.terms.size(); ++i)
        for (std::size_t r = 0; r < t.codomain.dim; ++r)
            for (std::size_t c2 = 0; c2 < t.domain.dim; ++c2)
                recon[r][c2] += out.weights[i] * out.terms[i].matrix[r][c2];
    for (std::size_t r = 0; r < t.codomain.dim; ++r)
        for (std::size_t c2 = 0; c2 < t.domain.dim; ++c2)
            out.reconstruction_error =
                std::max(out.reconstruction_error,
                         abs_val<S>(recon[r][c2] - t.matrix[r][c2]));
    return out;
}

}  // namespace genop

#endif
