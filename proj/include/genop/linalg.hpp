#ifndef GENOP_LINALG_HPP
#define GENOP_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "genop/errors.hpp"
#include "genop/scalar.hpp"

namespace genop {

template <class S>
using Vec = std::vector<S>;

// dense row-major matrix
template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw dim_mismatch("dot");
    S r{0};
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

template <class S>
Vec<S> add(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw dim_mismatch("add");
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
Vec<S> sub(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw dim_mismatch("sub");
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
Vec<S> scale(const S& t, const Vec<S>& a) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

template <class S>
Vec<S> neg(const Vec<S>& a) {
    return scale(S{-1}, a);
}

template <class S>
Vec<S> zero_vec(std::size_t n) {
    return Vec<S>(n, S{0});
}

template <class S>
Vec<S> unit_vec(std::size_t n, std::size_t i) {
    Vec<S> r(n, S{0});
    r[i] = S{1};
    return r;
}

template <class S>
bool vec_approx_eq(const Vec<S>& a, const Vec<S>& b, const S& tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!approx_eq(a[i], b[i], tol)) return false;
    return true;
}

template <class S>
Vec<S> matvec(const Mat<S>& m, const Vec<S>& x) {
    Vec<S> r(m.size(), S{0});
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw dim_mismatch("matvec");
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
    }
    return r;
}

template <class S>
Mat<S> transpose(const Mat<S>& m) {
    if (m.empty()) return {};
    Mat<S> r(m[0].size(), Vec<S>(m.size(), S{0}));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

template <class S>
Mat<S> matmul(const Mat<S>& a, const Mat<S>& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat<S> r(n, Vec<S>(m, S{0}));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw dim_mismatch("matmul");
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][p] * b[p][j];
    }
    return r;
}

// rank via Gaussian elimination with full-magnitude pivoting
template <class S>
std::size_t rank(Mat<S> m, const S& tol) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (abs_val<S>(m[i][c]) > abs_val<S>(m[piv][c])) piv = i;
        if (abs_val<S>(m[piv][c]) <= tol) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            S f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// solve m x = b, m square; nullopt if singular
template <class S>
std::optional<Vec<S>> solve_linear(Mat<S> m, Vec<S> b, const S& tol) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (abs_val<S>(m[i][c]) > abs_val<S>(m[piv][c])) piv = i;
        if (abs_val<S>(m[piv][c]) <= tol) return std::nullopt;
        std::swap(m[c], m[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            S f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            b[i] -= f * b[c];
        }
    }
    Vec<S> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
    return x;
}

// Eigenvalues/vectors of a symmetric matrix by cyclic Jacobi (double only).
// Returns eigenvalues; if vecs != nullptr, columns of *vecs are eigenvectors.
inline std::vector<double> symmetric_eigen(Mat<double> a,
                                           Mat<double>* vecs = nullptr) {
    std::size_t n = a.size();
    Mat<double> v(n, Vec<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-28) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    if (vecs) *vecs = v;
    return eig;
}

inline double euclidean_norm(const Vec<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

template <class S>
S euclidean_norm_sq(const Vec<S>& x) {
    S s{0};
    for (const S& v : x) s += v * v;
    return s;
}

}  // namespace genop

#endif
