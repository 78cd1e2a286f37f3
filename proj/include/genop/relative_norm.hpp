#ifndef GENOP_RELATIVE_NORM_HPP
#define GENOP_RELATIVE_NORM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "genop/errors.hpp"
#include "genop/generating.hpp"
#include "genop/lp.hpp"
#include "genop/operator.hpp"

namespace genop {

// sup ||Tx|| over the part of the sphere where ||Gx|| >= 1 - delta; the
// region is a union of polytopes, so the sup sits at one of their vertices
template <class S>
S relative_norm_delta(const Operator<S>& t, const Operator<S>& g,
                      const S& delta,
                      const S& tol = scalar_traits<S>::default_tol()) {
    if (t.domain.dim != g.domain.dim) throw dim_mismatch("relative_norm");
    DeltaRegion<S> region = delta_attainment(g, delta, tol);
    S best{0};
    for (const auto& piece : region.pieces)
        for (const auto& v : piece.vertices)
            best = std::max(best, norm(t.codomain, genop::apply(t, v)));
    return best;
}

// ||T||_G: the delta -> 0 limit. All data is piecewise linear in delta, so
// the limit equals the value of the closed delta = 0 region.
template <class S>
S relative_norm(const Operator<S>& t, const Operator<S>& g,
                const S& tol = scalar_traits<S>::default_tol()) {
    return relative_norm_delta(t, g, S{0}, tol);
}

template <class S>
std::vector<std::pair<S, S>> relative_norm_sweep(
    const Operator<S>& t, const Operator<S>& g, const std::vector<S>& deltas,
    const S& tol = scalar_traits<S>::default_tol()) {
    std::vector<std::pair<S, S>> out;
    for (const auto& d : deltas)
        out.emplace_back(d, relative_norm_delta(t, g, d, tol));
    return out;
}

// delta_k = 2^-k for k = 1..count
template <class S>
std::vector<S> dyadic_deltas(std::size_t count = 20) {
    std::vector<S> out;
    S d{1};
    for (std::size_t k = 0; k < count; ++k) {
        d = d / S{2};
        out.push_back(d);
    }
    return out;
}

// v_G(T) for polyhedral spaces: the limit region for a fixed extreme dual
// functional u is the face {<u, Gx> = 1} of the ball, whose extreme points
// are ball vertices, so pairs (v, u) with <u, Gv> = 1 suffice.
template <class S>
S numerical_radius(const Operator<S>& t, const Operator<S>& g,
                   const S& tol = scalar_traits<S>::default_tol()) {
    if (t.domain.dim != g.domain.dim || t.codomain.dim != g.codomain.dim)
        throw dim_mismatch("numerical_radius");
    auto ext = extreme_points(g.domain);
    auto du = extreme_points(dual(g.codomain));
    if (!ext || !du) throw not_polyhedral("numerical_radius");
    require_norm_one(g, tol);
    S best{0};
    for (const auto& u : *du)
        for (const auto& v : *ext)
            if (approx_eq(dot(u, genop::apply(g, v)), S{1}, tol))
                best = std::max(best,
                                abs_val<S>(dot(u, genop::apply(t, v))));
    return best;
}

template <class S>
S numerical_radius_delta(const Operator<S>& t, const Operator<S>& g,
                         const S& delta,
                         const S& tol = scalar_traits<S>::default_tol()) {
    if (t.domain.dim != g.domain.dim || t.codomain.dim != g.codomain.dim)
        throw dim_mismatch("numerical_radius");
    auto ext = extreme_points(g.domain);
    auto du = extreme_points(dual(g.codomain));
    if (!ext || !du) throw not_polyhedral("numerical_radius");
    require_norm_one(g, tol);
    Mat<S> gt = transpose(g.matrix);
    S best{0};
    for (const auto& u : *du) {
        Halfspace<S> keep{neg(matvec(gt, u)), -(S{1} - delta)};
        for (const auto& f : ball_facets(g.domain)) {
            PolytopeV<S> face;
            for (const auto& v : *ext)
                if (approx_eq(dot(f.normal, v), S{1}, tol))
                    face.vertices.push_back(v);
            if (face.vertices.empty()) continue;
            for (const auto& x : cut(face, keep, tol).vertices)
                best = std::max(best,
                                abs_val<S>(dot(u, genop::apply(t, x))));
        }
    }
    return best;
}

template <class S>
struct RelativeNormReport {
    S t_norm{0};  // ||T||
    S t_rel{0};   // ||T||_G
    S v_g{0};     // v_G(T), zero when shapes rule it out
    std::vector<std::pair<S, S>> delta_sweep;
};

template <class S>
RelativeNormReport<S> report(const Operator<S>& t, const Operator<S>& g,
                             std::size_t sweep_count = 20,
                             const S& tol = scalar_traits<S>::default_tol()) {
    RelativeNormReport<S> rep;
    rep.t_norm = operator_norm(t).value;
    rep.t_rel = relative_norm(t, g, tol);
    if (t.codomain.dim == g.codomain.dim)
        rep.v_g = numerical_radius(t, g, tol);
    rep.delta_sweep =
        relative_norm_sweep(t, g, dyadic_deltas<S>(sweep_count), tol);
    return rep;
}

// x* v = z_i x*_j as an operator into the given codomain
template <class S>
Operator<S> rank_one(const Vec<S>& functional, const Vec<S>& z,
                     Space<S> domain, Space<S> codomain) {
    Mat<S> m(z.size(), Vec<S>(functional.size()));
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < functional.size(); ++j)
            m[i][j] = z[i] * functional[j];
    return make_operator(std::move(domain), std::move(codomain), std::move(m));
}

template <class S>
struct RankOneWitness {
    Vec<S> functional;  // norm one, peaks at the missed vertex
    S gap{0};           // |functional| <= 1 - gap on the attainment set
    Vec<S> missed;      // extreme point where ||Gv|| < 1
};

// For non-generating G, a functional x* with ||x*|| = 1 whose rank-one
// operators x* z satisfy ||x* z||_G <= 1 - gap < 1 = ||x* z||. Found by
// an LP that peaks x* at a vertex missed by the attainment set while
// suppressing it on the attaining vertices.
template <class S>
std::optional<RankOneWitness<S>> rank_one_defect_witness(
    const Operator<S>& g, const S& tol = scalar_traits<S>::default_tol()) {
    auto ext = extreme_points(g.domain);
    if (!ext) throw not_polyhedral("rank_one_defect_witness");
    require_norm_one(g, tol);
    std::vector<Vec<S>> attaining;
    std::optional<Vec<S>> missed;
    for (const auto& v : *ext) {
        if (norm(g.codomain, genop::apply(g, v)) >= S{1} - tol)
            attaining.push_back(v);
        else if (!missed)
            missed = v;
    }
    if (!missed) return std::nullopt;
    std::size_t d = g.domain.dim;
    Mat<S> a;
    Vec<S> b;
    auto row = [&](Vec<S> xc, const S& gc, const S& rhs) {
        xc.push_back(gc);
        a.push_back(std::move(xc));
        b.push_back(rhs);
    };
    row(*missed, S{0}, S{1});
    row(neg(*missed), S{0}, S{-1});  // <x*, missed> = 1
    for (const auto& w : *ext) row(w, S{0}, S{1});  // ||x*|| <= 1
    for (const auto& w : attaining) {
        row(w, S{1}, S{1});  // <x*, w> + gap <= 1
        row(neg(w), S{1}, S{1});
    }
    Vec<S> c(d + 1, S{0});
    c[d] = S{1};
    LpResult<S> r = lp_solve(a, b, c);
    if (r.status != LpStatus::Optimal || r.value <= tol) return std::nullopt;
    RankOneWitness<S> w;
    w.functional = Vec<S>(r.x.begin(), r.x.begin() + d);
    w.gap = r.value;
    w.missed = *missed;
    return w;
}

}  // namespace genop

#endif
