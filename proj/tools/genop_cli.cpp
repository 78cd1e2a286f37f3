#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genop/catalog.hpp"
#include "genop/generating.hpp"
#include "genop/json_io.hpp"
#include "genop/oracle.hpp"
#include "genop/relative_norm.hpp"

namespace {

using namespace genop;

json load_json(const std::string& path) {
    if (path == "-" || path.empty()) return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open " + path);
    return json::parse(in);
}

template <class S>
Vec<S> vector_from_file(const std::string& path) {
    json j = load_json(path);
    if (j.is_array()) return vec_from_json<S>(j);
    if (j.contains("coords")) return vec_from_json<S>(j.at("coords"));
    throw bad_input("expected a coordinate array or {\"coords\":[...]}");
}

template <class S>
std::vector<Vec<S>> vectors_from_file(const std::string& path) {
    json j = load_json(path);
    const json& arr = j.is_array() ? j : j.at("vectors");
    std::vector<Vec<S>> out;
    for (const auto& e : arr) out.push_back(vec_from_json<S>(e));
    return out;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return 0;
        case Verdict::Refuted:
            return 1;
        default:
            return 2;
    }
}

struct Options {
    std::string backend;
    double tol = -1;  // negative: backend default
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    std::string delta_grid;
    std::string csv_path;
    std::string command;
    std::vector<std::string> args;
};

template <class S>
S effective_tol(const Options& o) {
    if (o.tol < 0) return scalar_traits<S>::default_tol();
    return scalar_traits<S>::from_double(o.tol);
}

template <class S>
std::vector<S> parse_grid(const Options& o) {
    if (o.delta_grid.empty()) return dyadic_deltas<S>(20);
    std::vector<S> out;
    std::stringstream ss(o.delta_grid);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(scalar_traits<S>::from_double(std::stod(item)));
    if (out.empty()) throw bad_input("empty delta grid");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

template <class S>
int run_typed(const Options& o) {
    const std::string backend = scalar_traits<S>::exact ? "rational" : "float";
    S tol = effective_tol<S>(o);
    auto arg = [&](std::size_t i) -> std::string {
        return i < o.args.size() ? o.args[i] : std::string("-");
    };

    if (o.command == "check-generating") {
        auto g = operator_from_json<S>(load_json(arg(0)));
        Certificate<S> cert;
        try {
            cert = is_generating(g, tol);
        } catch (const unsupported&) {
            if constexpr (!scalar_traits<S>::exact) {
                SampleConfig cfg;
                cfg.count = o.samples;
                cfg.seed = o.seed;
                cert = sampled_generating(g, cfg);
            } else {
                throw;
            }
        }
        emit(certificate_to_json(cert, backend));
        return verdict_exit(cert.verdict);
    }
    if (o.command == "radius") {
        auto g = operator_from_json<S>(load_json(arg(0)));
        auto r = generating_radius(g, tol);
        json att = json::array();
        for (const auto& v : r.attaining) att.push_back(vec_to_json(v));
        emit(json{{"radius", scalar_to_json(r.radius)},
                  {"attaining", std::move(att)}});
        return 0;
    }
    if (o.command == "spear-vector") {
        auto x = vector_from_file<S>(arg(0));
        auto s = space_from_json<S>(load_json(arg(1)));
        auto cert = is_spear_vector(x, s, tol);
        emit(certificate_to_json(cert, backend));
        return verdict_exit(cert.verdict);
    }
    if (o.command == "spear-set") {
        auto f = vectors_from_file<S>(arg(0));
        auto s = space_from_json<S>(load_json(arg(1)));
        auto cert = is_spear_set(f, s, tol);
        emit(certificate_to_json(cert, backend));
        return verdict_exit(cert.verdict);
    }
    if (o.command == "relative-norm") {
        auto t = operator_from_json<S>(load_json(arg(0)));
        auto g = operator_from_json<S>(load_json(arg(1)));
        RelativeNormReport<S> rep;
        rep.t_norm = operator_norm(t).value;
        rep.t_rel = relative_norm(t, g, tol);
        if (t.codomain.dim == g.codomain.dim)
            rep.v_g = numerical_radius(t, g, tol);
        rep.delta_sweep = relative_norm_sweep(t, g, parse_grid<S>(o), tol);
        json sweep = json::array();
        for (const auto& [d, v] : rep.delta_sweep)
            sweep.push_back(json::array({scalar_to_json(d), scalar_to_json(v)}));
        emit(json{{"t_norm", scalar_to_json(rep.t_norm)},
                  {"t_rel", scalar_to_json(rep.t_rel)},
                  {"v_g", scalar_to_json(rep.v_g)},
                  {"delta_sweep", std::move(sweep)}});
        if (!o.csv_path.empty()) {
            std::ofstream csv(o.csv_path);
            csv << "delta,value\n";
            for (const auto& [d, v] : rep.delta_sweep)
                csv << scalar_traits<S>::to_string(d) << ","
                    << scalar_traits<S>::to_string(v) << "\n";
        }
        return 0;
    }
    if (o.command == "numerical-radius") {
        auto t = operator_from_json<S>(load_json(arg(0)));
        auto g = operator_from_json<S>(load_json(arg(1)));
        try {
            S v = numerical_radius(t, g, tol);
            emit(json{{"value", scalar_to_json(v)}, {"exact", true}});
        } catch (const not_polyhedral&) {
            if constexpr (!scalar_traits<S>::exact) {
                SampleConfig cfg;
                cfg.count = o.samples;
                cfg.seed = o.seed;
                double v = sampled_numerical_radius(t, g, cfg);
                emit(json{{"value", v}, {"exact", false}});
            } else {
                throw;
            }
        }
        return 0;
    }
    if (o.command == "decompose") {
        auto t = operator_from_json<S>(load_json(arg(0)));
        auto dec = decompose_into_generating(t, tol);
        json terms = json::array();
        for (std::size_t i = 0; i < dec.terms.size(); ++i)
            terms.push_back(json{{"weight", scalar_to_json(dec.weights[i])},
                                 {"operator", operator_to_json(dec.terms[i])}});
        emit(json{{"terms", std::move(terms)},
                  {"reconstruction_error",
                   scalar_to_json(dec.reconstruction_error)}});
        return 0;
    }
    if (o.command == "example") {
        if (o.args.empty()) {
            json names = json::array();
            for (const auto& n : catalog_names()) names.push_back(n);
            emit(json{{"examples", names}});
            return 0;
        }
        std::vector<std::string> params(o.args.begin() + 1, o.args.end());
        auto e = build<S>(o.args[0], params);
        emit(operator_to_json(e.op));
        return 0;
    }
    if (o.command == "oracle") {
        if constexpr (scalar_traits<S>::exact) {
            throw unsupported("the sampling oracle runs on the float backend");
        } else {
            SampleConfig cfg;
            cfg.count = o.samples;
            cfg.seed = o.seed;
            std::string sub = arg(0);
            if (sub == "generating") {
                auto g = operator_from_json<S>(load_json(arg(1)));
                auto cert = sampled_generating(g, cfg);
                emit(certificate_to_json(cert, backend));
                return verdict_exit(cert.verdict);
            }
            if (sub == "radius") {
                auto g = operator_from_json<S>(load_json(arg(1)));
                emit(json{{"radius", sampled_radius(g, cfg)},
                          {"exact", false}});
                return 0;
            }
            if (sub == "numerical-radius") {
                auto t = operator_from_json<S>(load_json(arg(1)));
                auto g = operator_from_json<S>(load_json(arg(2)));
                emit(json{{"value", sampled_numerical_radius(t, g, cfg)},
                          {"exact", false}});
                return 0;
            }
            throw bad_input("unknown oracle subcommand " + sub);
        }
    }
    throw bad_input("unknown command " + o.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generating operators between "
                 "finite-dimensional normed spaces"};
    Options o;
    const char* env = std::getenv("GENOP_BACKEND");
    o.backend = env ? env : "rational";
    app.add_option("--backend", o.backend, "rational or float")
        ->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--tol", o.tol, "absolute tolerance (default per backend)");
    app.add_option("--samples", o.samples, "sample count for oracles");
    app.add_option("--seed", o.seed, "RNG seed for oracles");
    app.add_option("--delta-grid", o.delta_grid,
                   "comma-separated deltas for sweeps");
    app.add_option("--csv", o.csv_path, "write the delta sweep as CSV");
    app.add_option("command", o.command, "subcommand")->required();
    app.add_option("args", o.args, "command arguments");
    CLI11_PARSE(app, argc, argv);
    try {
        if (o.backend == "float")
            return run_typed<double>(o);
        return run_typed<genop::Rational>(o);
    } catch (const std::exception& e) {
        std::cout << genop::json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    }
}
