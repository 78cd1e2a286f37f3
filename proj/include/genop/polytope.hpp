#ifndef GENOP_POLYTOPE_HPP
#define GENOP_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "genop/errors.hpp"
#include "genop/linalg.hpp"
#include "genop/lp.hpp"
#include "genop/scalar.hpp"

namespace genop {

// constraint <normal, x> <= offset
template <class S>
struct Halfspace {
    Vec<S> normal;
    S offset{0};
};

template <class S>
struct PolytopeV {
    std::vector<Vec<S>> vertices;
};

template <class S>
struct PolytopeH {
    std::vector<Halfspace<S>> halfspaces;
};

template <class S>
struct HullResult {
    PolytopeH<S> facets;   // valid only when !degenerate
    bool degenerate{false};
    std::size_t affine_dim{0};
};

namespace detail {

template <class S>
std::size_t polytope_dim(const PolytopeH<S>& p) {
    if (p.halfspaces.empty()) throw bad_input("empty halfspace list");
    return p.halfspaces[0].normal.size();
}

using TightSet = std::vector<std::size_t>;  // sorted constraint indices

inline TightSet tight_intersect(const TightSet& a, const TightSet& b) {
    TightSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(r));
    return r;
}

}  // namespace detail

// Maximal margin by which x sticks out of conv(points), measured against
// functionals with sup-norm at most one; <= 0 means x lies in the hull.
// Also returns the separating functional, which doubles as a witness.
template <class S>
std::pair<S, Vec<S>> separation_margin(const Vec<S>& x,
                                       const std::vector<Vec<S>>& points) {
    std::size_t d = x.size();
    // vars: c (free, d), s (free); maximize <c,x> - s
    Mat<S> a;
    Vec<S> b;
    for (const auto& v : points) {
        Vec<S> row(d + 1, S{0});
        for (std::size_t j = 0; j < d; ++j) row[j] = v[j];
        row[d] = S{-1};
        a.push_back(row);
        b.push_back(S{0});
    }
    for (std::size_t j = 0; j < d; ++j) {
        Vec<S> row(d + 1, S{0});
        row[j] = S{1};
        a.push_back(row);
        b.push_back(S{1});
        row[j] = S{-1};
        a.push_back(row);
        b.push_back(S{1});
    }
    Vec<S> c(d + 1, S{0});
    for (std::size_t j = 0; j < d; ++j) c[j] = x[j];
    c[d] = S{-1};
    LpResult<S> r = lp_solve(a, b, c);
    if (r.status != LpStatus::Optimal)
        throw bad_input("separation LP failed");
    Vec<S> func(r.x.begin(), r.x.begin() + d);
    return {r.value, func};
}

template <class S>
bool in_convex_hull(const Vec<S>& x, const std::vector<Vec<S>>& points,
                    const S& tol = scalar_traits<S>::default_tol()) {
    return separation_margin(x, points).first <= tol;
}

// Drop points lying in the convex hull of the others.
template <class S>
std::vector<Vec<S>> irredundant_points(
    std::vector<Vec<S>> pts, const S& tol = scalar_traits<S>::default_tol()) {
    // dedupe first
    std::vector<Vec<S>> uniq;
    for (auto& p : pts) {
        bool dup = false;
        for (auto& q : uniq)
            if (vec_approx_eq(p, q, tol)) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(std::move(p));
    }
    if (uniq.size() <= 1) return uniq;
    std::vector<Vec<S>> keep;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        std::vector<Vec<S>> others;
        for (std::size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(uniq[j]);
        if (separation_margin(uniq[i], others).first > tol)
            keep.push_back(uniq[i]);
    }
    return keep;
}

// Exact vertex set of a bounded H-polytope, incremental double description.
// Starts from a bounding box obtained by LP and keeps per-vertex tight
// constraint sets; two vertices are adjacent iff their common tight
// constraints have rank d-1.
template <class S>
PolytopeV<S> vertex_enumerate(const PolytopeH<S>& p,
                              const S& tol = scalar_traits<S>::default_tol()) {
    std::size_t d = detail::polytope_dim(p);
    std::size_t m = p.halfspaces.size();
    for (const auto& h : p.halfspaces)
        if (h.normal.size() != d) throw dim_mismatch("vertex_enumerate");

    Mat<S> a(m);
    Vec<S> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = p.halfspaces[i].normal;
        b[i] = p.halfspaces[i].offset;
    }
    Vec<S> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        LpResult<S> up = lp_solve(a, b, unit_vec<S>(d, j));
        if (up.status == LpStatus::Infeasible)
            throw empty_polytope("vertex_enumerate");
        if (up.status == LpStatus::Unbounded)
            throw unbounded_polytope("vertex_enumerate");
        LpResult<S> dn = lp_solve(a, b, neg(unit_vec<S>(d, j)));
        if (dn.status != LpStatus::Optimal)
            throw unbounded_polytope("vertex_enumerate");
        hi[j] = up.value + S{1};
        lo[j] = -dn.value - S{1};
    }

    // constraints: 2d box rows first, then the input rows
    std::vector<Halfspace<S>> cons;
    for (std::size_t j = 0; j < d; ++j) {
        cons.push_back({unit_vec<S>(d, j), hi[j]});
        cons.push_back({neg(unit_vec<S>(d, j)), -lo[j]});
    }
    for (const auto& h : p.halfspaces) cons.push_back(h);

    struct DdVertex {
        Vec<S> point;
        detail::TightSet tight;
    };
    std::vector<DdVertex> verts;
    // box corners
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        DdVertex v;
        v.point.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            bool top = (mask >> j) & 1;
            v.point[j] = top ? hi[j] : lo[j];
            v.tight.push_back(2 * j + (top ? 0 : 1));
        }
        std::sort(v.tight.begin(), v.tight.end());
        verts.push_back(std::move(v));
    }

    for (std::size_t k = 2 * d; k < cons.size(); ++k) {
        const auto& h = cons[k];
        std::vector<S> sigma(verts.size());
        bool any_out = false;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            sigma[i] = h.offset - dot(h.normal, verts[i].point);
            if (sigma[i] < -tol) any_out = true;
        }
        if (!any_out) {
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (abs_val<S>(sigma[i]) <= tol) {
                    verts[i].tight.push_back(k);
                    std::sort(verts[i].tight.begin(), verts[i].tight.end());
                }
            continue;
        }
        std::vector<DdVertex> next;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (sigma[i] > tol) {
                next.push_back(verts[i]);
            } else if (abs_val<S>(sigma[i]) <= tol) {
                DdVertex v = verts[i];
                v.tight.push_back(k);
                std::sort(v.tight.begin(), v.tight.end());
                next.push_back(std::move(v));
            }
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (sigma[i] <= tol) continue;  // need strict interior endpoint
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (sigma[j] >= -tol) continue;
                detail::TightSet common =
                    detail::tight_intersect(verts[i].tight, verts[j].tight);
                if (common.size() < d - 1) continue;
                std::vector<Vec<S>> normals;
                for (std::size_t ci : common) normals.push_back(cons[ci].normal);
                if (rank(normals, scalar_traits<S>::pivot_tol()) != d - 1)
                    continue;
                S t = sigma[i] / (sigma[i] - sigma[j]);
                Vec<S> w =
                    add(verts[i].point,
                        scale(t, sub(verts[j].point, verts[i].point)));
                common.push_back(k);
                std::sort(common.begin(), common.end());
                // merge with an existing equal vertex if present
                bool merged = false;
                for (auto& nv : next) {
                    if (vec_approx_eq(nv.point, w, tol)) {
                        detail::TightSet uni;
                        std::set_union(nv.tight.begin(), nv.tight.end(),
                                       common.begin(), common.end(),
                                       std::back_inserter(uni));
                        nv.tight = std::move(uni);
                        merged = true;
                        break;
                    }
                }
                if (!merged) next.push_back({std::move(w), std::move(common)});
            }
        }
        verts = std::move(next);
        if (verts.empty()) break;
    }

    PolytopeV<S> out;
    for (auto& v : verts) out.vertices.push_back(std::move(v.point));
    return out;
}

// Facet description of conv(points). Lower-dimensional hulls are reported
// via the degenerate flag together with the affine dimension.
template <class S>
HullResult<S> hull(const std::vector<Vec<S>>& points,
                   const S& tol = scalar_traits<S>::default_tol()) {
    if (points.empty()) throw bad_input("hull of empty point set");
    std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw dim_mismatch("hull");

    std::vector<Vec<S>> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    std::size_t adim = diffs.empty() ? 0 : rank(diffs, tol);
    if (adim < d) {
        HullResult<S> r;
        r.degenerate = true;
        r.affine_dim = adim;
        return r;
    }

    Vec<S> c = zero_vec<S>(d);
    for (const auto& p : points) c = add(c, p);
    c = scale(S{1} / scalar_traits<S>::from_int(
                         static_cast<long>(points.size())),
              c);

    // polar of conv(points) - c, then vertices of the polar are the facets
    PolytopeH<S> polar;
    for (const auto& p : points) polar.halfspaces.push_back({sub(p, c), S{1}});
    PolytopeV<S> pv = vertex_enumerate(polar, tol);

    HullResult<S> r;
    r.affine_dim = d;
    for (const auto& y : pv.vertices)
        r.facets.halfspaces.push_back({y, S{1} + dot(y, c)});
    return r;
}

// Vertex set of conv(p) intersected with a halfspace. Works for
// lower-dimensional input (used on facet pieces of unit balls).
template <class S>
PolytopeV<S> cut(const PolytopeV<S>& p, const Halfspace<S>& h,
                 const S& tol = scalar_traits<S>::default_tol()) {
    if (p.vertices.empty()) return {};
    std::size_t d = p.vertices[0].size();
    if (h.normal.size() != d) throw dim_mismatch("cut");
    std::vector<S> sigma;
    for (const auto& v : p.vertices) sigma.push_back(h.offset - dot(h.normal, v));
    std::vector<Vec<S>> cand;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (sigma[i] >= -tol) cand.push_back(p.vertices[i]);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (sigma[i] <= tol) continue;
        for (std::size_t j = 0; j < p.vertices.size(); ++j) {
            if (sigma[j] >= -tol) continue;
            S t = sigma[i] / (sigma[i] - sigma[j]);
            cand.push_back(add(p.vertices[i],
                               scale(t, sub(p.vertices[j], p.vertices[i]))));
        }
    }
    PolytopeV<S> out;
    out.vertices = irredundant_points(std::move(cand), tol);
    return out;
}

// exact maximum of <objective, x> with an attaining vertex
template <class S>
std::pair<S, Vec<S>> lp_max(const Vec<S>& objective, const PolytopeV<S>& p) {
    if (p.vertices.empty()) throw empty_polytope("lp_max");
    std::size_t best = 0;
    S bestv = dot(objective, p.vertices[0]);
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        S v = dot(objective, p.vertices[i]);
        if (v > bestv) {
            bestv = v;
            best = i;
        }
    }
    return {bestv, p.vertices[best]};
}

template <class S>
std::pair<S, Vec<S>> lp_max(const Vec<S>& objective, const PolytopeH<S>& p) {
    Mat<S> a;
    Vec<S> b;
    for (const auto& h : p.halfspaces) {
        a.push_back(h.normal);
        b.push_back(h.offset);
    }
    LpResult<S> r = lp_solve(a, b, objective);
    if (r.status == LpStatus::Infeasible) throw empty_polytope("lp_max");
    if (r.status == LpStatus::Unbounded) throw unbounded_polytope("lp_max");
    return {r.value, r.x};
}

}  // namespace genop

#endif
