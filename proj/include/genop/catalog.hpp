#ifndef GENOP_CATALOG_HPP
#define GENOP_CATALOG_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "genop/errors.hpp"
#include "genop/operator.hpp"

namespace genop {

template <class S>
struct NamedExample {
    std::string name;
    Operator<S> op;
    // check name -> expected outcome, e.g. "generating" -> "VERIFIED"
    std::map<std::string, std::string> expected;
    std::string provenance;
};

namespace detail {

inline std::size_t parse_count(const std::string& s) {
    std::size_t pos = 0;
    long n = std::stol(s, &pos);
    if (pos != s.size() || n < 1) throw bad_input("bad size parameter " + s);
    return static_cast<std::size_t>(n);
}

template <class S>
Mat<S> diag_matrix(std::size_t n, const std::vector<S>& d) {
    Mat<S> m(n, Vec<S>(n, S{0}));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = d[i];
    return m;
}

}  // namespace detail

template <class S>
NamedExample<S> build_l1_to_linf_inclusion(std::size_t n) {
    std::vector<S> ones(n, S{1});
    NamedExample<S> e{
        "l1_to_linf_inclusion(" + std::to_string(n) + ")",
        make_operator(make_l1<S>(n), make_linf<S>(n),
                      detail::diag_matrix<S>(n, ones)),
        {{"generating", "VERIFIED"}, {"radius", "1"}},
        "natural inclusion of the sum norm space into the max norm space"};
    return e;
}

template <class S>
NamedExample<S> build_c0_diagonal(std::size_t n) {
    std::vector<S> d;
    for (std::size_t i = 1; i <= n; ++i)
        d.push_back(S{1} / scalar_traits<S>::from_int(static_cast<long>(i)));
    NamedExample<S> e{
        "c0_diagonal(" + std::to_string(n) + ")",
        make_operator(make_linf<S>(n), make_linf<S>(n),
                      detail::diag_matrix<S>(n, d)),
        {{"generating", "VERIFIED"}, {"radius", "1"}},
        "diagonal with decaying entries on the max norm space; every sign "
        "vector attains through the first coordinate"};
    return e;
}

template <class S>
NamedExample<S> build_l1_diagonal(std::size_t n) {
    if (n < 2) throw bad_input("l1_diagonal needs n >= 2");
    std::vector<S> d;
    for (std::size_t i = 1; i <= n; ++i)
        d.push_back(S{1} / scalar_traits<S>::from_int(static_cast<long>(i)));
    NamedExample<S> e{
        "l1_diagonal(" + std::to_string(n) + ")",
        make_operator(make_l1<S>(n), make_l1<S>(n),
                      detail::diag_matrix<S>(n, d)),
        {{"generating", "REFUTED"}, {"radius", "0"}, {"witness", "e2"}},
        "same diagonal on the sum norm space; the second basis vector "
        "misses the norm"};
    return e;
}

template <class S>
NamedExample<S> build_hilbert_counterexample(const S& r) {
    if (!(r > S{0} && r < S{1}))
        throw bad_input("hilbert_counterexample needs r in (0,1)");
    // r Id + (1-r) e1* (x) e1 = diag(1, r) on the Euclidean plane
    NamedExample<S> e{
        "hilbert_counterexample(" + scalar_traits<S>::to_string(r) + ")",
        make_operator(make_l2<S>(2), make_l2<S>(2),
                      Mat<S>{{S{1}, S{0}}, {S{0}, r}}),
        {{"generating", "REFUTED"}, {"radius", "0"}},
        "Euclidean plane operator attaining its norm only at the first "
        "axis; convex hull of the attainment set has empty interior"};
    return e;
}

inline NamedExample<double> build_cos_sin(std::size_t n) {
    if (n < 2) throw bad_input("cos_sin needs n >= 2");
    Mat<double> m(2, Vec<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(n - 1);
        m[0][k] = std::cos(t);
        m[1][k] = std::sin(t);
    }
    NamedExample<double> e{
        "cos_sin(" + std::to_string(n) + ")",
        make_operator(make_l1<double>(n), make_l2<double>(2), std::move(m)),
        {{"generating", "VERIFIED"}},
        "columns are points of the unit circle; all columns have norm one, "
        "which suffices on a sum norm domain"};
    return e;
}

// Block-diagonal sum of factor operators on matching l1 or linf sums of
// their spaces. On l1 sums the block is generating exactly when every factor
// is: the extreme points of the domain ball are the embedded factor extreme
// points, so one deficient factor leaves a vertex off the sphere. On linf
// sums the extreme points are tuples with one coordinate per factor, and a
// single factor attaining at all of its extreme points already carries every
// tuple to the sphere — there the rule is "at least one factor generating".
template <class S>
NamedExample<S> build_block_sum(std::vector<NamedExample<S>> factors,
                                const std::string& kind) {
    if (factors.empty()) throw bad_input("block_sum needs factors");
    if (kind != "l1sum" && kind != "linfsum")
        throw bad_input("block_sum kind must be l1sum or linfsum");
    std::vector<Space<S>> doms, cods;
    std::size_t dr = 0, dc = 0;
    for (const auto& f : factors) {
        doms.push_back(f.op.domain);
        cods.push_back(f.op.codomain);
        dc += f.op.domain.dim;
        dr += f.op.codomain.dim;
    }
    Mat<S> m(dr, Vec<S>(dc, S{0}));
    std::size_t ro = 0, co = 0;
    bool all_gen = true, any_gen = false;
    std::string name = "block_sum(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        for (std::size_t r = 0; r < f.op.codomain.dim; ++r)
            for (std::size_t c = 0; c < f.op.domain.dim; ++c)
                m[ro + r][co + c] = f.op.matrix[r][c];
        ro += f.op.codomain.dim;
        co += f.op.domain.dim;
        if (f.expected.at("generating") == "VERIFIED")
            any_gen = true;
        else
            all_gen = false;
        name += (i ? "," : "") + f.name;
    }
    name += ";" + kind + ")";
    bool l1 = kind == "l1sum";
    Space<S> dom = l1 ? make_l1_sum(std::move(doms))
                      : make_linf_sum(std::move(doms));
    Space<S> cod = l1 ? make_l1_sum(std::move(cods))
                      : make_linf_sum(std::move(cods));
    bool gen = l1 ? all_gen : any_gen;
    NamedExample<S> e{
        std::move(name),
        make_operator(std::move(dom), std::move(cod), std::move(m)),
        {{"generating", gen ? "VERIFIED" : "REFUTED"}},
        l1 ? "block-diagonal sum on sum-norm spaces; generating exactly when "
             "every factor is"
           : "block-diagonal sum on max-norm spaces; generating exactly when "
             "some factor is"};
    return e;
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "l1_to_linf_inclusion", "c0_diagonal", "l1_diagonal",
        "hilbert_counterexample", "cos_sin", "block_sum"};
    return names;
}

// params: one entry for the size/parameter families; for block_sum, factor
// specs "name:param" followed by the sum kind.
template <class S>
NamedExample<S> build(const std::string& name,
                      const std::vector<std::string>& params) {
    auto need_one = [&]() -> const std::string& {
        if (params.size() != 1) throw bad_input(name + " takes one parameter");
        return params[0];
    };
    if (name == "l1_to_linf_inclusion")
        return build_l1_to_linf_inclusion<S>(detail::parse_count(need_one()));
    if (name == "c0_diagonal")
        return build_c0_diagonal<S>(detail::parse_count(need_one()));
    if (name == "l1_diagonal")
        return build_l1_diagonal<S>(detail::parse_count(need_one()));
    if (name == "hilbert_counterexample")
        return build_hilbert_counterexample<S>(
            scalar_traits<S>::from_double(std::stod(need_one())));
    if (name == "cos_sin") {
        if constexpr (scalar_traits<S>::exact)
            throw unsupported(
                "cos_sin uses transcendental entries; use the float backend");
        else
            return build_cos_sin(detail::parse_count(need_one()));
    }
    if (name == "block_sum") {
        if (params.size() < 2)
            throw bad_input("block_sum needs factor specs and a kind");
        std::vector<NamedExample<S>> factors;
        for (std::size_t i = 0; i + 1 < params.size(); ++i) {
            auto pos = params[i].find(':');
            if (pos == std::string::npos)
                throw bad_input("factor must look like name:param");
            factors.push_back(build<S>(params[i].substr(0, pos),
                                       {params[i].substr(pos + 1)}));
        }
        return build_block_sum<S>(std::move(factors), params.back());
    }
    throw bad_input("unknown example " + name);
}

}  // namespace genop

#endif
