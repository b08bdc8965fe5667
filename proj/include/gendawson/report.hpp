#pragma once

#include <string_view>

namespace gendawson {

enum class Method { series, quadrature, ode };

constexpr std::string_view to_string(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::quadrature: return "quadrature";
        case Method::ode: return "ode";
    }
    return "unknown";
}

/// Result of a single function evaluation.
struct EvalReport {
    double value = 0.0;
    Method method = Method::quadrature;
    double est_error = 0.0;
    /// Truncation order (series), panel count (quadrature) or step count (ode).
    long detail = 0;
    /// Set when |x| reached the radius hint of the b-spec; the value is best effort.
    bool beyond_radius = false;
};

}  // namespace gendawson
