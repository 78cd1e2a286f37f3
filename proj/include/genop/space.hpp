#ifndef GENOP_SPACE_HPP
#define GENOP_SPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "genop/errors.hpp"
#include "genop/linalg.hpp"
#include "genop/polytope.hpp"
#include "genop/scalar.hpp"

namespace genop {

enum class NormKind { L1, L2, Linf, PolytopeBall, L1Sum, LinfSum };

template <class S>
struct Space;

template <class S>
struct NormSpec {
    NormKind kind{NormKind::L1};
    // PolytopeBall only: irredundant vertices and facets (offsets scaled to 1)
    std::vector<Vec<S>> ball_vertices;
    std::vector<Halfspace<S>> ball_facets;
    // direct sums only
    std::vector<Space<S>> parts;
};

template <class S>
struct Space {
    std::size_t dim{0};
    NormSpec<S> norm;
};

template <class S>
Space<S> make_l1(std::size_t n) {
    if (n == 0) throw bad_input("dimension must be positive");
    return {n, {NormKind::L1, {}, {}, {}}};
}

template <class S>
Space<S> make_l2(std::size_t n) {
    if (n == 0) throw bad_input("dimension must be positive");
    return {n, {NormKind::L2, {}, {}, {}}};
}

template <class S>
Space<S> make_linf(std::size_t n) {
    if (n == 0) throw bad_input("dimension must be positive");
    return {n, {NormKind::Linf, {}, {}, {}}};
}

// Symmetric polytope ball from a vertex list. Validates balance
// (closure under negation), boundedness and full dimension.
template <class S>
Space<S> make_polytope_ball_v(const std::vector<Vec<S>>& points,
                              const S& tol = scalar_traits<S>::default_tol()) {
    if (points.empty()) throw bad_input("polytope ball needs vertices");
    std::size_t d = points[0].size();
    for (const auto& p : points) {
        if (p.size() != d) throw dim_mismatch("polytope ball vertices");
        bool has_neg = false;
        for (const auto& q : points)
            if (vec_approx_eq(neg(p), q, tol)) {
                has_neg = true;
                break;
            }
        if (!has_neg)
            throw bad_input("polytope ball must be symmetric (missing -v)");
    }
    HullResult<S> h = hull(points, tol);
    if (h.degenerate)
        throw bad_input("polytope ball is not full-dimensional");
    Space<S> s;
    s.dim = d;
    s.norm.kind = NormKind::PolytopeBall;
    for (auto hs : h.facets.halfspaces) {
        if (hs.offset <= tol)
            throw bad_input("polytope ball must contain 0 in its interior");
        s.norm.ball_facets.push_back(
            {scale(S{1} / hs.offset, hs.normal), S{1}});
    }
    PolytopeH<S> facets{s.norm.ball_facets};
    s.norm.ball_vertices = vertex_enumerate(facets, tol).vertices;
    return s;
}

template <class S>
Space<S> make_polytope_ball_h(const std::vector<Halfspace<S>>& halfspaces,
                              const S& tol = scalar_traits<S>::default_tol()) {
    if (halfspaces.empty()) throw bad_input("polytope ball needs facets");
    PolytopeH<S> p{halfspaces};
    PolytopeV<S> v = vertex_enumerate(p, tol);
    if (v.vertices.empty()) throw bad_input("empty polytope ball");
    return make_polytope_ball_v(v.vertices, tol);
}

template <class S>
Space<S> make_l1_sum(std::vector<Space<S>> parts) {
    if (parts.empty()) throw bad_input("direct sum needs parts");
    Space<S> s;
    s.norm.kind = NormKind::L1Sum;
    for (auto& p : parts) s.dim += p.dim;
    s.norm.parts = std::move(parts);
    return s;
}

template <class S>
Space<S> make_linf_sum(std::vector<Space<S>> parts) {
    if (parts.empty()) throw bad_input("direct sum needs parts");
    Space<S> s;
    s.norm.kind = NormKind::LinfSum;
    for (auto& p : parts) s.dim += p.dim;
    s.norm.parts = std::move(parts);
    return s;
}

template <class S>
bool is_polyhedral(const Space<S>& s) {
    switch (s.norm.kind) {
        case NormKind::L1:
        case NormKind::Linf:
        case NormKind::PolytopeBall:
            return true;
        case NormKind::L2:
            return false;
        default:
            for (const auto& p : s.norm.parts)
                if (!is_polyhedral(p)) return false;
            return true;
    }
}

// a pure Euclidean space (single L2 block)
template <class S>
bool is_euclidean(const Space<S>& s) {
    return s.norm.kind == NormKind::L2;
}

namespace detail {

template <class S>
std::vector<Vec<S>> slice_parts(const Space<S>& s, const Vec<S>& x) {
    std::vector<Vec<S>> out;
    std::size_t off = 0;
    for (const auto& p : s.norm.parts) {
        out.emplace_back(x.begin() + off, x.begin() + off + p.dim);
        off += p.dim;
    }
    return out;
}

}  // namespace detail

template <class S>
S norm(const Space<S>& s, const Vec<S>& x) {
    if (x.size() != s.dim) throw dim_mismatch("norm");
    switch (s.norm.kind) {
        case NormKind::L1: {
            S r{0};
            for (const auto& v : x) r += abs_val<S>(v);
            return r;
        }
        case NormKind::Linf: {
            S r{0};
            for (const auto& v : x) r = std::max(r, abs_val<S>(v));
            return r;
        }
        case NormKind::L2: {
            if constexpr (scalar_traits<S>::exact)
                throw unsupported(
                    "Euclidean norm is irrational; use the float backend");
            else
                return euclidean_norm(x);
        }
        case NormKind::PolytopeBall: {
            // Minkowski gauge of the ball: facet offsets are 1
            S r{0};
            for (const auto& h : s.norm.ball_facets)
                r = std::max(r, dot(h.normal, x));
            return r;
        }
        case NormKind::L1Sum: {
            S r{0};
            auto slices = detail::slice_parts(s, x);
            for (std::size_t i = 0; i < slices.size(); ++i)
                r += norm(s.norm.parts[i], slices[i]);
            return r;
        }
        default: {  // LinfSum
            S r{0};
            auto slices = detail::slice_parts(s, x);
            for (std::size_t i = 0; i < slices.size(); ++i)
                r = std::max(r, norm(s.norm.parts[i], slices[i]));
            return r;
        }
    }
}

template <class S>
Space<S> dual(const Space<S>& s) {
    switch (s.norm.kind) {
        case NormKind::L1:
            return make_linf<S>(s.dim);
        case NormKind::Linf:
            return make_l1<S>(s.dim);
        case NormKind::L2:
            return s;
        case NormKind::PolytopeBall: {
            // polar: primal facet normals become dual vertices and vice versa
            Space<S> d;
            d.dim = s.dim;
            d.norm.kind = NormKind::PolytopeBall;
            for (const auto& h : s.norm.ball_facets)
                d.norm.ball_vertices.push_back(h.normal);
            for (const auto& v : s.norm.ball_vertices)
                d.norm.ball_facets.push_back({v, S{1}});
            return d;
        }
        case NormKind::L1Sum: {
            std::vector<Space<S>> dp;
            for (const auto& p : s.norm.parts) dp.push_back(dual(p));
            return make_linf_sum(std::move(dp));
        }
        default: {  // LinfSum
            std::vector<Space<S>> dp;
            for (const auto& p : s.norm.parts) dp.push_back(dual(p));
            return make_l1_sum(std::move(dp));
        }
    }
}

// Exact ext(B_X) for polyhedral spaces, nullopt for anything touching L2.
template <class S>
std::optional<std::vector<Vec<S>>> extreme_points(const Space<S>& s) {
    switch (s.norm.kind) {
        case NormKind::L1: {
            std::vector<Vec<S>> r;
            for (std::size_t i = 0; i < s.dim; ++i) {
                r.push_back(unit_vec<S>(s.dim, i));
                r.push_back(neg(unit_vec<S>(s.dim, i)));
            }
            return r;
        }
        case NormKind::Linf: {
            std::vector<Vec<S>> r;
            for (std::size_t mask = 0; mask < (std::size_t{1} << s.dim);
                 ++mask) {
                Vec<S> v(s.dim);
                for (std::size_t j = 0; j < s.dim; ++j)
                    v[j] = ((mask >> j) & 1) ? S{1} : S{-1};
                r.push_back(std::move(v));
            }
            return r;
        }
        case NormKind::L2:
            return std::nullopt;
        case NormKind::PolytopeBall:
            return s.norm.ball_vertices;
        case NormKind::L1Sum: {
            std::vector<Vec<S>> r;
            std::size_t off = 0;
            for (const auto& p : s.norm.parts) {
                auto pe = extreme_points(p);
                if (!pe) return std::nullopt;
                for (const auto& v : *pe) {
                    Vec<S> e = zero_vec<S>(s.dim);
                    for (std::size_t j = 0; j < p.dim; ++j) e[off + j] = v[j];
                    r.push_back(std::move(e));
                }
                off += p.dim;
            }
            return r;
        }
        default: {  // LinfSum: cartesian products of part extreme points
            std::vector<std::vector<Vec<S>>> pes;
            for (const auto& p : s.norm.parts) {
                auto pe = extreme_points(p);
                if (!pe) return std::nullopt;
                pes.push_back(std::move(*pe));
            }
            std::vector<Vec<S>> r = {Vec<S>{}};
            for (const auto& pe : pes) {
                std::vector<Vec<S>> next;
                for (const auto& prefix : r)
                    for (const auto& v : pe) {
                        Vec<S> e = prefix;
                        e.insert(e.end(), v.begin(), v.end());
                        next.push_back(std::move(e));
                    }
                r = std::move(next);
            }
            return r;
        }
    }
}

// Facets of the unit ball as <u,x> <= 1 with u running over the extreme
// points of the dual ball; polyhedral spaces only.
template <class S>
std::vector<Halfspace<S>> ball_facets(const Space<S>& s) {
    auto du = extreme_points(dual(s));
    if (!du) throw not_polyhedral("ball_facets");
    std::vector<Halfspace<S>> r;
    for (auto& u : *du) r.push_back({std::move(u), S{1}});
    return r;
}

// Largest r >= 0 with r B_X contained in conv(c): min over facets
// <a,x> <= b of hull(c) of b / ||a||_dual; 0 for degenerate hulls.
template <class S>
S contained_ball_radius(const Space<S>& s, const PolytopeV<S>& c,
                        const S& tol = scalar_traits<S>::default_tol()) {
    if (c.vertices.empty()) return S{0};
    for (const auto& v : c.vertices)
        if (v.size() != s.dim) throw dim_mismatch("contained_ball_radius");
    HullResult<S> h = hull(c.vertices, tol);
    if (h.degenerate) return S{0};
    Space<S> ds = dual(s);
    std::optional<S> r;
    for (const auto& f : h.facets.halfspaces) {
        if (f.offset <= tol) return S{0};  // 0 not interior to the hull
        S cand = f.offset / norm(ds, f.normal);
        if (!r || cand < *r) r = cand;
    }
    return *r;
}

}  // namespace genop

#endif
