#ifndef GENOP_LP_HPP
#define GENOP_LP_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "genop/linalg.hpp"
#include "genop/scalar.hpp"

namespace genop {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class S>
struct LpResult {
    LpStatus status;
    S value{0};
    Vec<S> x;  // an optimal point (free variables), empty unless Optimal
};

namespace detail {

// Dense two-phase tableau simplex, maximize c.y subject to A y <= b, y >= 0.
// Bland's rule throughout: terminates on degenerate instances and is
// deterministic, which matters for certificate reproducibility.
template <class S>
class Tableau {
   public:
    Tableau(const Mat<S>& a, const Vec<S>& b, const Vec<S>& c)
        : nvars_(c.size()), m_(a.size()), cost_(c) {
        piv_tol_ = scalar_traits<S>::pivot_tol();
        nart_ = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (b[i] < S{0}) ++nart_;
        slack_end_ = nvars_ + m_;
        ncols_ = nvars_ + m_ + nart_;
        rows_.assign(m_, Vec<S>(ncols_, S{0}));
        rhs_.assign(m_, S{0});
        basis_.assign(m_, 0);
        std::size_t art = nvars_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            S sign = b[i] < S{0} ? S{-1} : S{1};
            for (std::size_t j = 0; j < nvars_; ++j)
                rows_[i][j] = sign * a[i][j];
            rows_[i][nvars_ + i] = sign;  // slack
            rhs_[i] = sign * b[i];
            if (b[i] < S{0}) {
                rows_[i][art] = S{1};
                basis_[i] = art;
                ++art;
            } else {
                basis_[i] = nvars_ + i;
            }
        }
    }

    LpResult<S> solve() {
        if (nart_ > 0) {
            // phase 1: maximize -sum(artificials)
            Vec<S> c1(ncols_, S{0});
            for (std::size_t j = slack_end_; j < ncols_; ++j) c1[j] = S{-1};
            set_objective(c1);
            if (!iterate()) return {LpStatus::Unbounded, S{0}, {}};
            if (obj_rhs_ < -feas_tol()) return {LpStatus::Infeasible, S{0}, {}};
            purge_artificials();
        }
        Vec<S> c2(ncols_, S{0});
        for (std::size_t j = 0; j < nvars_; ++j) c2[j] = cost_[j];
        set_objective(c2);
        if (!iterate()) return {LpStatus::Unbounded, S{0}, {}};
        Vec<S> x(nvars_, S{0});
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < nvars_) x[basis_[i]] = rhs_[i];
        return {LpStatus::Optimal, obj_rhs_, x};
    }

   private:
    S feas_tol() const {
        if constexpr (scalar_traits<S>::exact)
            return S{0};
        else
            return S{1e-9};
    }

    void set_objective(const Vec<S>& c) {
        objc_ = c;
        obj_.assign(ncols_, S{0});
        obj_rhs_ = S{0};
        for (std::size_t j = 0; j < ncols_; ++j) obj_[j] = c[j];
        for (std::size_t i = 0; i < m_; ++i) price_out(i);
    }

    void price_out(std::size_t i) {
        const S& cb = objc_[basis_[i]];
        if (cb == S{0}) return;
        for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= cb * rows_[i][j];
        obj_rhs_ += cb * rhs_[i];
    }

    void pivot(std::size_t r, std::size_t c) {
        S p = rows_[r][c];
        for (std::size_t j = 0; j < ncols_; ++j) rows_[r][j] = rows_[r][j] / p;
        rhs_[r] = rhs_[r] / p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            S f = rows_[i][c];
            if (f == S{0}) continue;
            for (std::size_t j = 0; j < ncols_; ++j)
                rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        S f = obj_[c];
        if (f != S{0}) {
            for (std::size_t j = 0; j < ncols_; ++j)
                obj_[j] -= f * rows_[r][j];
            obj_rhs_ += f * rhs_[r];
        }
        basis_[r] = c;
    }

    // returns false on unboundedness
    bool iterate() {
        for (;;) {
            // Bland: smallest improving column
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (obj_[j] > piv_tol_) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols_) return true;
            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= piv_tol_) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                S lhs = rhs_[i] * rows_[leave][enter];
                S rhsv = rhs_[leave] * rows_[i][enter];
                if (lhs < rhsv ||
                    (lhs == rhsv && basis_[i] < basis_[leave]))
                    leave = i;
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    // drive artificial variables out of the basis, drop redundant rows
    void purge_artificials() {
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < slack_end_) {
                ++i;
                continue;
            }
            std::size_t c = slack_end_;
            for (std::size_t j = 0; j < slack_end_; ++j) {
                if (abs_val<S>(rows_[i][j]) > piv_tol_) {
                    c = j;
                    break;
                }
            }
            if (c < slack_end_) {
                pivot(i, c);
                ++i;
            } else {
                rows_.erase(rows_.begin() + i);
                rhs_.erase(rhs_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
            }
        }
        // drop the artificial columns so phase 2 cannot bring them back
        for (auto& r : rows_) r.resize(slack_end_);
        ncols_ = slack_end_;
        nart_ = 0;
    }

    std::size_t nvars_, m_, nart_, ncols_, slack_end_;
    Vec<S> cost_;
    Mat<S> rows_;
    Vec<S> rhs_;
    std::vector<std::size_t> basis_;
    Vec<S> obj_, objc_;
    S obj_rhs_{0};
    S piv_tol_;
};

}  // namespace detail

// maximize c.y subject to A y <= b with y >= 0
template <class S>
LpResult<S> lp_solve_nonneg(const Mat<S>& a, const Vec<S>& b, const Vec<S>& c) {
    detail::Tableau<S> t(a, b, c);
    return t.solve();
}

// maximize c.x subject to A x <= b with x free (split x = u - w)
template <class S>
LpResult<S> lp_solve(const Mat<S>& a, const Vec<S>& b, const Vec<S>& c) {
    std::size_t n = c.size();
    Mat<S> a2(a.size(), Vec<S>(2 * n, S{0}));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a2[i][j] = a[i][j];
            a2[i][n + j] = -a[i][j];
        }
    Vec<S> c2(2 * n, S{0});
    for (std::size_t j = 0; j < n; ++j) {
        c2[j] = c[j];
        c2[n + j] = -c[j];
    }
    LpResult<S> r = lp_solve_nonneg(a2, b, c2);
    if (r.status == LpStatus::Optimal) {
        Vec<S> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
        r.x = std::move(x);
    }
    return r;
}

}  // namespace genop

#endif
