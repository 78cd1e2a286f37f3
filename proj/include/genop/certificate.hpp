#ifndef GENOP_CERTIFICATE_HPP
#define GENOP_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "genop/linalg.hpp"
#include "genop/polytope.hpp"
#include "genop/scalar.hpp"

namespace genop {

enum class Verdict { Verified, Refuted, Inconclusive };

enum class Method { VertexExact, EuclideanExact, DualSpear, Sampled };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return "VERIFIED";
        case Verdict::Refuted:
            return "REFUTED";
        default:
            return "INCONCLUSIVE";
    }
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::VertexExact:
            return "VERTEX_EXACT";
        case Method::EuclideanExact:
            return "EUCLIDEAN_EXACT";
        case Method::DualSpear:
            return "DUAL_SPEAR";
        default:
            return "SAMPLED";
    }
}

// Outcome of a decision procedure together with enough data to recheck it.
// Sampling can refute (a concrete bad point) but never verify.
template <class S>
struct Certificate {
    Verdict verdict{Verdict::Inconclusive};
    Method method{Method::VertexExact};
    std::optional<Vec<S>> witness_vector;
    std::optional<Halfspace<S>> witness_functional;
    std::string detail;
    S tolerance{0};
    std::size_t samples{0};
    std::uint64_t seed{0};
};

}  // namespace genop

#endif
