#ifndef GENOP_OPERATOR_HPP
#define GENOP_OPERATOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "genop/errors.hpp"
#include "genop/linalg.hpp"
#include "genop/polytope.hpp"
#include "genop/space.hpp"

namespace genop {

// rows of `matrix` are indexed by codomain coordinates
template <class S>
struct Operator {
    Space<S> domain;
    Space<S> codomain;
    Mat<S> matrix;
};

template <class S>
Operator<S> make_operator(Space<S> domain, Space<S> codomain, Mat<S> matrix) {
    if (matrix.size() != codomain.dim) throw dim_mismatch("operator rows");
    for (const auto& row : matrix)
        if (row.size() != domain.dim) throw dim_mismatch("operator columns");
    return {std::move(domain), std::move(codomain), std::move(matrix)};
}

template <class S>
Vec<S> apply(const Operator<S>& t, const Vec<S>& x) {
    return matvec(t.matrix, x);
}

template <class S>
Operator<S> adjoint(const Operator<S>& t) {
    return {dual(t.codomain), dual(t.domain), transpose(t.matrix)};
}

template <class S>
struct NormResult {
    S value{0};
    bool exact{true};  // false only for the sampled fallback
    std::optional<Vec<S>> maximizer;
};

namespace detail {

// deterministic lower bound for norms with no exact path (double only)
inline NormResult<double> sampled_operator_norm(const Operator<double>& t,
                                                std::size_t samples,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    NormResult<double> best{0.0, false, std::nullopt};
    for (std::size_t k = 0; k < samples; ++k) {
        Vec<double> x(t.domain.dim);
        for (auto& v : x) v = g(rng);
        double nx = norm(t.domain, x);
        if (nx < 1e-12) continue;
        x = scale(1.0 / nx, x);
        double val = norm(t.codomain, genop::apply(t, x));
        if (val > best.value) {
            best.value = val;
            best.maximizer = x;
        }
    }
    return best;
}

}  // namespace detail

template <class S>
NormResult<S> operator_norm(const Operator<S>& t) {
    if (auto ext = extreme_points(t.domain)) {
        // convexity: the norm is attained at a ball vertex
        NormResult<S> best;
        for (const auto& v : *ext) {
            S val = norm(t.codomain, genop::apply(t, v));
            if (!best.maximizer || val > best.value) {
                best.value = val;
                best.maximizer = v;
            }
        }
        return best;
    }
    if (is_euclidean(t.domain)) {
        if constexpr (scalar_traits<S>::exact) {
            throw unsupported(
                "Euclidean operator norms are irrational; use the float "
                "backend or compare squares directly");
        } else {
            if (is_euclidean(t.codomain)) {
                Mat<S> gram = matmul(transpose(t.matrix), t.matrix);
                Mat<S> vecs;
                auto eig = symmetric_eigen(gram, &vecs);
                std::size_t arg = 0;
                for (std::size_t i = 1; i < eig.size(); ++i)
                    if (eig[i] > eig[arg]) arg = i;
                NormResult<S> r;
                r.value = std::sqrt(std::max(eig[arg], 0.0));
                Vec<S> x(t.domain.dim);
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = vecs[i][arg];
                r.maximizer = x;
                return r;
            }
            if (auto du = extreme_points(dual(t.codomain))) {
                // ||T|| = max_u ||T* u||_2 over extreme dual functionals
                Mat<S> tt = transpose(t.matrix);
                NormResult<S> best;
                for (const auto& u : *du) {
                    Vec<S> a = matvec(tt, u);
                    S val = euclidean_norm(a);
                    if (!best.maximizer || val > best.value) {
                        best.value = val;
                        best.maximizer =
                            val > 1e-12 ? scale(S{1} / val, a) : a;
                    }
                }
                return best;
            }
        }
    }
    if constexpr (scalar_traits<S>::exact)
        throw unsupported("no exact norm path for this space pair");
    else
        return detail::sampled_operator_norm(t, 200000, 0x9e3779b97f4a7c15ull);
}

template <class S>
void require_norm_one(const Operator<S>& t,
                      const S& tol = scalar_traits<S>::default_tol()) {
    S n = operator_norm(t).value;
    if (abs_val<S>(n - S{1}) > tol)
        throw not_norm_one("got " + scalar_traits<S>::to_string(n));
}

template <class S>
Operator<S> normalize(const Operator<S>& t) {
    S n = operator_norm(t).value;
    if (n == S{0}) throw bad_input("cannot normalize the zero operator");
    Operator<S> r = t;
    for (auto& row : r.matrix)
        for (auto& v : row) v = v / n;
    return r;
}

template <class S>
struct AttainmentReport {
    S operator_norm{0};
    std::vector<Vec<S>> vertices;  // ball vertices within tol of the norm
    std::vector<S> values;         // ||Tv|| for each listed vertex
    S tolerance{0};
};

template <class S>
AttainmentReport<S> attainment(const Operator<S>& t,
                               const S& tol = scalar_traits<S>::default_tol()) {
    auto ext = extreme_points(t.domain);
    if (!ext) throw not_polyhedral("attainment");
    AttainmentReport<S> rep;
    rep.tolerance = tol;
    std::vector<S> vals;
    for (const auto& v : *ext) {
        vals.push_back(norm(t.codomain, genop::apply(t, v)));
        if (vals.back() > rep.operator_norm) rep.operator_norm = vals.back();
    }
    for (std::size_t i = 0; i < ext->size(); ++i)
        if (vals[i] >= rep.operator_norm - tol) {
            rep.vertices.push_back((*ext)[i]);
            rep.values.push_back(vals[i]);
        }
    return rep;
}

template <class S>
struct DeltaRegion {
    S delta{0};
    // convex pieces whose union is {x on the unit sphere: ||Gx|| >= 1-delta}
    std::vector<PolytopeV<S>> pieces;
};

// Sphere slice where G nearly attains its norm. G must have norm one and
// both spaces must be polyhedral. Each sphere facet is cut against each
// linear functional u.G with u an extreme dual unit functional of the
// codomain; nonempty intersections are reported as vertex lists.
template <class S>
DeltaRegion<S> delta_attainment(const Operator<S>& g, const S& delta,
                                const S& tol =
                                    scalar_traits<S>::default_tol()) {
    if (delta < S{0}) throw bad_input("delta must be nonnegative");
    auto ext = extreme_points(g.domain);
    auto du = extreme_points(dual(g.codomain));
    if (!ext || !du) throw not_polyhedral("delta_attainment");
    require_norm_one(g, tol);
    Mat<S> gt = transpose(g.matrix);
    DeltaRegion<S> region;
    region.delta = delta;
    for (const auto& f : ball_facets(g.domain)) {
        PolytopeV<S> face;
        for (const auto& v : *ext)
            if (approx_eq(dot(f.normal, v), S{1}, tol))
                face.vertices.push_back(v);
        if (face.vertices.empty()) continue;
        for (const auto& u : *du) {
            // keep <u, Gx> >= 1 - delta
            Halfspace<S> keep{neg(matvec(gt, u)), -(S{1} - delta)};
            PolytopeV<S> piece = cut(face, keep, tol);
            if (!piece.vertices.empty())
                region.pieces.push_back(std::move(piece));
        }
    }
    return region;
}

}  // namespace genop

#endif
