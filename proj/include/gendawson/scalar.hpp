#pragma once

// Dual-mode scalars: exact rationals backed by arbitrary-precision integers,
// and plain doubles. Generic code is written against ScalarTraits<T>.

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gendawson/errors.hpp"

namespace gendawson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ScalarKind { exact_rational, floating };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr ScalarKind kind = ScalarKind::exact_rational;
    static Rational from_int(const BigInt& v) { return Rational(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static bool is_finite(const Rational&) { return true; }
    static bool is_zero(const Rational& v) { return v == 0; }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr ScalarKind kind = ScalarKind::floating;
    static double from_int(const BigInt& v) { return v.convert_to<double>(); }
    static double from_rational(const Rational& v) { return v.convert_to<double>(); }
    static bool is_finite(double v) { return std::isfinite(v); }
    static bool is_zero(double v) { return v == 0.0; }
    static double to_double(double v) { return v; }
};

/// Parses "p/q", an integer, or a decimal with optional exponent
/// ("-1.25e-3") into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact form: "p" when the denominator is one, otherwise "p/q".
std::string format_rational(const Rational& v);

/// Shortest decimal string that round-trips to the same double.
inline std::string format_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string format_scalar(const Rational& v) { return format_rational(v); }
inline std::string format_scalar(double v) { return format_shortest(v); }

}  // namespace gendawson
