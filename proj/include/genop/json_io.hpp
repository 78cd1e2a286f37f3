#ifndef GENOP_JSON_IO_HPP
#define GENOP_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "genop/certificate.hpp"
#include "genop/errors.hpp"
#include "genop/operator.hpp"
#include "genop/space.hpp"

namespace genop {

using nlohmann::json;

template <class S>
S scalar_from_json(const json& j) {
    if (j.is_string()) {
        // exact fraction "p/q"
        const std::string s = j.get<std::string>();
        if constexpr (scalar_traits<S>::exact) {
            return Rational(s);
        } else {
            auto pos = s.find('/');
            if (pos == std::string::npos) return std::stod(s);
            return std::stod(s.substr(0, pos)) / std::stod(s.substr(pos + 1));
        }
    }
    if (j.is_number())
        return scalar_traits<S>::from_double(j.get<double>());
    throw bad_input("expected a number or fraction string");
}

template <class S>
json scalar_to_json(const S& v) {
    if constexpr (scalar_traits<S>::exact)
        return scalar_traits<S>::to_string(v);
    else
        return v;
}

template <class S>
Vec<S> vec_from_json(const json& j) {
    if (!j.is_array()) throw bad_input("expected a coordinate array");
    Vec<S> v;
    for (const auto& e : j) v.push_back(scalar_from_json<S>(e));
    return v;
}

template <class S>
json vec_to_json(const Vec<S>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(scalar_to_json(e));
    return a;
}

template <class S>
Space<S> space_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("norm"))
        throw bad_input("space needs dim and norm");
    std::size_t dim = j.at("dim").get<std::size_t>();
    const json& n = j.at("norm");
    std::string type = n.at("type").get<std::string>();
    if (type == "l1") return make_l1<S>(dim);
    if (type == "linf") return make_linf<S>(dim);
    if (type == "l2") return make_l2<S>(dim);
    if (type == "lp")
        throw unsupported("general lp norms are not supported; use l1, l2 "
                          "or linf");
    if (type == "polytope_v") {
        std::vector<Vec<S>> verts;
        for (const auto& v : n.at("vertices")) verts.push_back(vec_from_json<S>(v));
        Space<S> s = make_polytope_ball_v(verts);
        if (s.dim != dim) throw dim_mismatch("space dim vs vertices");
        return s;
    }
    if (type == "polytope_h") {
        std::vector<Halfspace<S>> hs;
        for (const auto& h : n.at("facets"))
            hs.push_back({vec_from_json<S>(h.at("normal")),
                          scalar_from_json<S>(h.at("offset"))});
        Space<S> s = make_polytope_ball_h(hs);
        if (s.dim != dim) throw dim_mismatch("space dim vs facets");
        return s;
    }
    if (type == "l1sum" || type == "linfsum") {
        std::vector<Space<S>> parts;
        for (const auto& p : n.at("parts")) parts.push_back(space_from_json<S>(p));
        Space<S> s = type == "l1sum" ? make_l1_sum(std::move(parts))
                                     : make_linf_sum(std::move(parts));
        if (s.dim != dim) throw dim_mismatch("space dim vs parts");
        return s;
    }
    throw bad_input("unknown norm type " + type);
}

template <class S>
json space_to_json(const Space<S>& s) {
    json n;
    switch (s.norm.kind) {
        case NormKind::L1:
            n["type"] = "l1";
            break;
        case NormKind::Linf:
            n["type"] = "linf";
            break;
        case NormKind::L2:
            n["type"] = "l2";
            break;
        case NormKind::PolytopeBall: {
            n["type"] = "polytope_v";
            json verts = json::array();
            for (const auto& v : s.norm.ball_vertices)
                verts.push_back(vec_to_json(v));
            n["vertices"] = std::move(verts);
            break;
        }
        case NormKind::L1Sum:
        case NormKind::LinfSum: {
            n["type"] = s.norm.kind == NormKind::L1Sum ? "l1sum" : "linfsum";
            json parts = json::array();
            for (const auto& p : s.norm.parts) parts.push_back(space_to_json(p));
            n["parts"] = std::move(parts);
            break;
        }
    }
    return json{{"dim", s.dim}, {"norm", std::move(n)}};
}

template <class S>
Operator<S> operator_from_json(const json& j) {
    if (!j.contains("domain") || !j.contains("codomain") ||
        !j.contains("matrix"))
        throw bad_input("operator needs domain, codomain and matrix");
    Space<S> dom = space_from_json<S>(j.at("domain"));
    Space<S> cod = space_from_json<S>(j.at("codomain"));
    Mat<S> m;
    for (const auto& row : j.at("matrix")) m.push_back(vec_from_json<S>(row));
    return make_operator(std::move(dom), std::move(cod), std::move(m));
}

template <class S>
json operator_to_json(const Operator<S>& t) {
    json rows = json::array();
    for (const auto& r : t.matrix) rows.push_back(vec_to_json(r));
    return json{{"domain", space_to_json(t.domain)},
                {"codomain", space_to_json(t.codomain)},
                {"matrix", std::move(rows)}};
}

template <class S>
json certificate_to_json(const Certificate<S>& c, const std::string& backend) {
    json j;
    j["verdict"] = to_string(c.verdict);
    j["method"] = to_string(c.method);
    j["detail"] = c.detail;
    if (c.witness_vector)
        j["witness"] = json{{"type", "vector"},
                            {"coords", vec_to_json(*c.witness_vector)}};
    else if (c.witness_functional)
        j["witness"] =
            json{{"type", "halfspace"},
                 {"normal", vec_to_json(c.witness_functional->normal)},
                 {"offset", scalar_to_json(c.witness_functional->offset)}};
    else
        j["witness"] = nullptr;
    json cfg{{"backend", backend}, {"tol", scalar_to_json(c.tolerance)}};
    if (c.samples > 0) {
        cfg["seed"] = c.seed;
        cfg["samples"] = c.samples;
    }
    j["config"] = std::move(cfg);
    return j;
}

}  // namespace genop

#endif
