#ifndef GENOP_SCALAR_HPP
#define GENOP_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

namespace genop {

using Rational = boost::multiprecision::cpp_rational;

// Scalar backend traits. Two backends are supported: double (absolute
// tolerance 1e-9) and Rational (exact, tolerance 0).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double default_tol() { return 1e-9; }
    // pivot threshold for linear algebra, tighter than the user tolerance
    static double pivot_tol() { return 1e-11; }
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double abs(double v) { return std::fabs(v); }
    static std::string to_string(double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational default_tol() { return Rational(0); }
    static Rational pivot_tol() { return Rational(0); }
    // doubles are themselves rationals, so this conversion is exact
    static Rational from_double(double v) {
        if (v == 0.0) return Rational(0);
        int exp = 0;
        double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [0.5,1)
        boost::multiprecision::cpp_int num =
            static_cast<std::int64_t>(std::ldexp(m, 53));
        exp -= 53;
        boost::multiprecision::cpp_int den = 1;
        if (exp >= 0)
            num <<= exp;
        else
            den <<= -exp;
        return Rational(num, den);
    }
    static double to_double(const Rational& v) {
        return v.convert_to<double>();
    }
    static Rational from_int(long v) { return Rational(v); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static std::string to_string(const Rational& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
};

template <class S>
S abs_val(const S& v) {
    return scalar_traits<S>::abs(v);
}

template <class S>
bool approx_eq(const S& a, const S& b, const S& tol) {
    return abs_val<S>(a - b) <= tol;
}

template <class S>
bool approx_zero(const S& a, const S& tol) {
    return abs_val<S>(a) <= tol;
}

}  // namespace genop

#endif
