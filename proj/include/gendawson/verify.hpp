#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gendawson/bspec.hpp"
#include "gendawson/eval.hpp"
#include "gendawson/ode.hpp"

namespace gendawson {

struct VerifyOptions {
    double tol = kDefaultTol;
    double ode_step = kDefaultOdeStep;
    int series_order = kDefaultSeriesOrder;
    /// Row is flagged when |quad - ode| exceeds this.
    double ode_threshold = 1e-6;
    /// Row is flagged when |quad - series| exceeds the series error estimate plus this.
    double series_slack = 1e-9;
    /// Row is flagged when |D' - 1 + b D| exceeds this.
    double identity_threshold = 1e-6;
};

/// One grid point of the cross-method comparison. Optional fields are empty
/// when the corresponding evaluation failed or does not apply.
struct ResidualRow {
    double x = 0.0;
    std::optional<double> quad;
    std::optional<double> ode;
    std::optional<double> series;
    std::optional<double> series_bound;
    std::optional<double> resid_ode;
    std::optional<double> resid_series;
    std::optional<double> resid_identity;
    bool flag = false;
    std::string error;
};

/// Central-difference step for a first derivative at x: cbrt(eps) * max(1, |x|).
double first_difference_step(double x);
/// Central-difference step for a second derivative at x: eps^(1/4) * max(1, |x|).
double second_difference_step(double x);

/// |D_b'(x) - 1 + b(x) D_b(x)| with D_b' from a central difference of
/// quadrature values. The difference quotients use a tolerance well below
/// tol so that quadrature noise stays under the truncation error.
double identity_residual(const BSpec& b, double x, double tol = kDefaultTol);

/// Compares quadrature, RK4 and series values of D_b at every x of the grid.
/// A failing point is flagged with its error message; the others still run.
/// The series column is filled only where |x| is inside the radius hint.
std::vector<ResidualRow> residual_report(const BSpec& b, std::span<const double> grid,
                                         const VerifyOptions& opts = {});

}  // namespace gendawson
