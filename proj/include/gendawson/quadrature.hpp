#pragma once

#include <functional>

namespace gendawson {

struct QuadratureOptions {
    /// Absolute tolerance on the summed two-level panel differences.
    double tol = 1e-10;
    /// Maximum number of interval halvings below the initial panel.
    int max_depth = 40;
};

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    long panels = 0;
};

/// Adaptive integration of f over the oriented interval [a, b] (negative when
/// b < a). Each panel is integrated with a 20-point Gauss-Legendre rule and
/// compared with the same rule applied to its two halves; a panel is accepted
/// once the two levels agree within its share of the tolerance.
///
/// Throws OverflowError when f returns a non-finite value and ConvergenceError
/// (carrying the best estimate) when a panel still disagrees at max_depth.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

}  // namespace gendawson
