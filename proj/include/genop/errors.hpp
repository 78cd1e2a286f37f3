#ifndef GENOP_ERRORS_HPP
#define GENOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genop {

struct dim_mismatch : std::invalid_argument {
    explicit dim_mismatch(const std::string& what)
        : std::invalid_argument("dimension mismatch: " + what) {}
};

struct unbounded_polytope : std::invalid_argument {
    explicit unbounded_polytope(const std::string& what)
        : std::invalid_argument("unbounded polytope: " + what) {}
};

struct empty_polytope : std::invalid_argument {
    explicit empty_polytope(const std::string& what)
        : std::invalid_argument("empty polytope: " + what) {}
};

struct not_polyhedral : std::invalid_argument {
    explicit not_polyhedral(const std::string& what)
        : std::invalid_argument("not polyhedral: " + what) {}
};

struct not_norm_one : std::invalid_argument {
    explicit not_norm_one(const std::string& what)
        : std::invalid_argument("operator norm is not one: " + what) {}
};

struct norm_exceeds_one : std::invalid_argument {
    explicit norm_exceeds_one(const std::string& what)
        : std::invalid_argument("operator norm exceeds one: " + what) {}
};

struct unsupported : std::invalid_argument {
    explicit unsupported(const std::string& what)
        : std::invalid_argument("unsupported: " + what) {}
};

struct bad_input : std::invalid_argument {
    explicit bad_input(const std::string& what)
        : std::invalid_argument("bad input: " + what) {}
};

}  // namespace genop

#endif
